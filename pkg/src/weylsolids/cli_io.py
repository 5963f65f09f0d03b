"""Command-line surface and mesh/report serialization (OFF, OBJ, JSON)."""

from __future__ import annotations

import argparse
import difflib
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, TextIO

from .quat import Quaternion
from .groups import weyl_group
from .orbits import (ARCHIMEDEAN, PLATONIC, SOLIDS, UnknownSolidError,
                     named_solid)
from .mesh import (MeshError, Polyhedron, edge_classes, euler_characteristic,
                   face_classes, vertex_classes)
from .catalan import (ARCH_TO_CATALAN, CATALAN_NAMES, CATALAN_TO_ARCH,
                      DualReport, dual, format_dms, polygon_shape, solid_mesh)

VERIFIABLE = tuple(PLATONIC) + tuple(ARCHIMEDEAN) + CATALAN_NAMES


def _fmt(x: float) -> str:
    """12 significant digits, '.' separator, tiny noise snapped to zero."""
    if abs(x) < 1e-12:
        x = 0.0
    return format(x, ".12g")


def _round12(x: float) -> float:
    return float(_fmt(x))


def _write(text: str, destination) -> int:
    """Write text to a path, stream or stdout; returns bytes written."""
    data = text.encode("utf-8")
    if destination is None:
        sys.stdout.write(text)
        return len(data)
    if hasattr(destination, "write"):
        destination.write(text)
        return len(data)
    Path(destination).write_bytes(data)
    return len(data)


def export_off(p: Polyhedron, destination=None) -> int:
    """Standard OFF text: header, "V F E", vertex rows, CCW face rows."""
    lines = ["OFF", f"{len(p.vertices)} {len(p.faces)} {len(p.edges)}"]
    for v in p.vertices:
        lines.append(f"{_fmt(v.x)} {_fmt(v.y)} {_fmt(v.z)}")
    for face in p.faces:
        lines.append(" ".join([str(len(face))] + [str(i) for i in face]))
    return _write("\n".join(lines) + "\n", destination)


def export_obj(p: Polyhedron, destination=None) -> int:
    """Wavefront OBJ: "v x y z" rows, then "f" rows with 1-based indices."""
    lines = []
    for v in p.vertices:
        lines.append(f"v {_fmt(v.x)} {_fmt(v.y)} {_fmt(v.z)}")
    for face in p.faces:
        lines.append("f " + " ".join(str(i + 1) for i in face))
    return _write("\n".join(lines) + "\n", destination)


def parse_off(text: str) -> tuple[list[tuple[float, float, float]], list[tuple[int, ...]]]:
    """Read back an OFF document into vertex coordinates and face cycles."""
    rows = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if rows[0].strip() != "OFF":
        raise ValueError("not an OFF document")
    nv, nf, _ = (int(tok) for tok in rows[1].split())
    verts = [tuple(float(tok) for tok in rows[2 + i].split()) for i in range(nv)]
    faces = []
    for i in range(nf):
        toks = rows[2 + nv + i].split()
        if int(toks[0]) != len(toks) - 1:
            raise ValueError("face row count mismatch")
        faces.append(tuple(int(t) for t in toks[1:]))
    return verts, faces


def _mesh_dict(p: Polyhedron) -> dict:
    return {
        "counts": {"vertices": len(p.vertices), "edges": len(p.edges),
                   "faces": len(p.faces)},
        "vertices": [[_round12(v.x), _round12(v.y), _round12(v.z)]
                     for v in p.vertices],
        "edges": [list(e) for e in p.edges],
        "faces": [list(f) for f in p.faces],
    }


def _to_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


@dataclass(frozen=True)
class ReportDocument:
    name: str
    archimedean: str
    diagram: str
    weight: tuple[int, int, int]
    counts: tuple[int, int, int]
    scale_factors: dict[str, float]
    radii: tuple[tuple[str, float, int], ...]
    dihedral_degrees: float
    dihedral_dms: str
    face_shape: str
    face_classes: tuple[tuple[int, int], ...]
    edge_classes: tuple[tuple[int, float], ...]
    vertex_classes: tuple[int, ...]
    checks: dict[str, bool]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "archimedean": self.archimedean,
            "diagram": self.diagram,
            "weight": list(self.weight),
            "counts": {"vertices": self.counts[0], "edges": self.counts[1],
                       "faces": self.counts[2]},
            "scale_factors": {k: _round12(v) for k, v in sorted(self.scale_factors.items())},
            "radii": [{"orbit": lb, "radius": _round12(r), "vertices": n}
                      for lb, r, n in self.radii],
            "dihedral_degrees": _round12(self.dihedral_degrees),
            "dihedral_dms": self.dihedral_dms,
            "face_shape": self.face_shape,
            "face_classes": [list(c) for c in self.face_classes],
            "edge_classes": [[n, _round12(length)] for n, length in self.edge_classes],
            "vertex_classes": list(self.vertex_classes),
            "checks": dict(sorted(self.checks.items())),
        }

    def to_json(self) -> str:
        return _to_json(self.to_dict())

    def to_text(self) -> str:
        lines = [
            f"{self.name} (dual of {self.archimedean}, diagram {self.diagram}, "
            f"weight {''.join(str(a) for a in self.weight)})",
            f"counts: V={self.counts[0]} E={self.counts[1]} F={self.counts[2]}",
            f"dihedral: {format_dms(self.dihedral_degrees, ascii_suffixes=False)}"
            f" ({_fmt(self.dihedral_degrees)} deg)",
            "scale factors: " + "  ".join(f"{k}={_fmt(v)}"
                                          for k, v in sorted(self.scale_factors.items())),
            "radii: " + "  ".join(f"{lb}: r={_fmt(r)} ({n} vertices)"
                                  for lb, r, n in self.radii),
            f"faces: {self.face_classes[0][0]} congruent ({self.face_shape})",
            "edge classes: " + "  ".join(f"{n} of length {_fmt(length)}"
                                         for n, length in self.edge_classes),
            "vertex classes: " + " ".join(str(n) for n in self.vertex_classes),
            "checks: " + "  ".join(f"{k}={'pass' if ok else 'FAIL'}"
                                   for k, ok in sorted(self.checks.items())),
        ]
        return "\n".join(lines) + "\n"


def build_report(catalan_name: str) -> ReportDocument:
    if catalan_name not in CATALAN_TO_ARCH:
        raise UnknownSolidError(catalan_name, CATALAN_NAMES)
    arch_name = CATALAN_TO_ARCH[catalan_name]
    diagram, weight, _ = SOLIDS[arch_name]
    cat, rep = dual(arch_name)
    group = weyl_group(diagram)
    fclasses = tuple(face_classes(group, cat))
    eclasses = tuple(edge_classes(group, cat))
    vclasses = tuple(vertex_classes(group, cat))
    checks = {name: ok for name, ok, _ in verify_solid(catalan_name)}
    return ReportDocument(
        name=catalan_name,
        archimedean=arch_name,
        diagram=diagram,
        weight=weight,
        counts=rep.counts,
        scale_factors=rep.scale_factors,
        radii=rep.radii,
        dihedral_degrees=rep.dihedral_deg,
        dihedral_dms=format_dms(rep.dihedral_deg),
        face_shape=polygon_shape(cat, 0),
        face_classes=fclasses,
        edge_classes=eclasses,
        vertex_classes=vclasses,
        checks=checks,
    )


def _verify_orbit_solid(name: str) -> list[tuple[str, bool, str]]:
    diagram, _, size = SOLIDS[name]
    group = weyl_group(diagram)
    _, orb = named_solid(name)
    results = [
        ("orbit-size", len(orb) == size, f"{len(orb)} vs {size}"),
        ("orbit-stabilizer", len(orb) * orb.stabilizer_order == len(group),
         f"{len(orb)} x {orb.stabilizer_order} vs {len(group)}"),
    ]
    norms = [v.norm() for v in orb.vectors]
    spread = max(norms) - min(norms)
    results.append(("sphere", spread <= 1e-9, f"norm spread {spread:.3g}"))
    try:
        p = solid_mesh(name)
    except MeshError as exc:
        results.append(("mesh", False, str(exc)))
        return results
    results.append(("mesh", True, f"V={len(p.vertices)}"))
    results.append(("euler", euler_characteristic(p) == 2,
                    f"chi={euler_characteristic(p)}"))
    vc = vertex_classes(group, p)
    results.append(("vertex-transitive", vc == [len(p.vertices)], f"classes {vc}"))
    lengths = [p.edge_length(e) for e in p.edges]
    espread = max(lengths) - min(lengths)
    results.append(("uniform-edges", espread <= 1e-9, f"length spread {espread:.3g}"))
    return results


def _verify_catalan_solid(name: str) -> list[tuple[str, bool, str]]:
    arch_name = CATALAN_TO_ARCH[name]
    diagram, _, _ = SOLIDS[arch_name]
    group = weyl_group(diagram)
    arch = solid_mesh(arch_name)
    try:
        cat, rep = dual(arch_name)
    except Exception as exc:  # construction already validates; report the failure
        return [("dual", False, str(exc))]
    results = [("dual", True, "constructed")]
    duality = (len(cat.vertices) == len(arch.faces)
               and len(cat.faces) == len(arch.vertices)
               and len(cat.edges) == len(arch.edges))
    results.append(("counts-duality", duality, f"{rep.counts} vs arch {arch.counts}"))
    results.append(("euler", euler_characteristic(cat) == 2,
                    f"chi={euler_characteristic(cat)}"))
    fc = face_classes(group, cat)
    results.append(("face-transitive", len(fc) == 1, f"classes {fc}"))
    worst = 0.0
    arch_dirs = [v.normalized() for v in arch.vertices]
    for face, normal in zip(cat.faces, cat.face_normals):
        axis = max(arch_dirs, key=lambda d: d.x * normal.x + d.y * normal.y
                   + d.z * normal.z)
        offsets = [axis.x * cat.vertices[i].x + axis.y * cat.vertices[i].y
                   + axis.z * cat.vertices[i].z for i in face]
        worst = max(worst, max(offsets) - min(offsets))
    results.append(("orthogonality", worst <= 1e-9, f"max flatness {worst:.3g}"))
    stab = len(group) // len(arch.vertices)
    shape = polygon_shape(cat, 0)
    expected = {4: ("rhombus", "square"),
                2: ("isosceles-triangle", "kite"),
                1: ("scalene-triangle",)}[stab]
    results.append(("face-shape", shape in expected, f"{shape} (stabilizer {stab})"))
    return results


def verify_solid(name: str) -> list[tuple[str, bool, str]]:
    """Invariant checks for one solid: list of (check, passed, detail)."""
    if name in SOLIDS:
        return _verify_orbit_solid(name)
    if name in CATALAN_TO_ARCH:
        return _verify_catalan_solid(name)
    raise UnknownSolidError(name, VERIFIABLE)


def _suggestions(name: str, valid: Sequence[str]) -> str:
    close = difflib.get_close_matches(name, valid, n=3, cutoff=0.4)
    hint = f"; did you mean: {', '.join(close)}?" if close else ""
    return f"unknown solid {name!r}{hint}\nvalid names: {', '.join(valid)}"


def _cmd_generate(ns) -> int:
    if ns.solid not in SOLIDS:
        print(_suggestions(ns.solid, tuple(SOLIDS)), file=sys.stderr)
        return 2
    p = solid_mesh(ns.solid)
    if ns.format == "off":
        export_off(p, ns.out)
    elif ns.format == "obj":
        export_obj(p, ns.out)
    else:
        diagram, weight, _ = SOLIDS[ns.solid]
        doc = {"name": ns.solid, "diagram": diagram, "weight": list(weight)}
        doc.update(_mesh_dict(p))
        _write(_to_json(doc), ns.out)
    return 0


def _cmd_dual(ns) -> int:
    if ns.solid not in ARCH_TO_CATALAN:
        print(_suggestions(ns.solid, tuple(ARCH_TO_CATALAN)), file=sys.stderr)
        return 2
    cat, rep = dual(ns.solid)
    if ns.format == "off":
        export_off(cat, ns.out)
    elif ns.format == "obj":
        export_obj(cat, ns.out)
    else:
        doc = {"report": build_report(rep.name).to_dict(), "mesh": _mesh_dict(cat)}
        _write(_to_json(doc), ns.out)
    return 0


def _cmd_report(ns) -> int:
    if ns.solid not in CATALAN_TO_ARCH:
        print(_suggestions(ns.solid, CATALAN_NAMES), file=sys.stderr)
        return 2
    doc = build_report(ns.solid)
    _write(doc.to_json() if ns.format == "json" else doc.to_text(), ns.out)
    return 0


def _cmd_verify(ns) -> int:
    if ns.all:
        names = sorted(VERIFIABLE)
    elif ns.solid:
        if ns.solid not in VERIFIABLE:
            print(_suggestions(ns.solid, VERIFIABLE), file=sys.stderr)
            return 2
        names = [ns.solid]
    else:
        print("verify: give a solid name or --all", file=sys.stderr)
        return 2
    failures = 0
    for name in names:
        checks = verify_solid(name)
        bad = [(c, detail) for c, ok, detail in checks if not ok]
        if bad:
            failures += 1
            detail = "; ".join(f"{c}: {d}" for c, d in bad)
            print(f"FAIL  {name:32s} {detail}")
        else:
            print(f"PASS  {name:32s} {len(checks)} checks")
    print(f"{len(names)} solids checked, {failures} failures")
    return 1 if failures else 0


def _cmd_list(ns) -> int:
    print("orbit solids (name, diagram, weight):")
    for name, (diagram, weight, size) in SOLIDS.items():
        label = "".join(str(a) for a in weight)
        print(f"  {name:32s} {diagram} {label}  ({size} vertices)")
    print("catalan duals (name, archimedean):")
    for arch, cat in ARCH_TO_CATALAN.items():
        print(f"  {cat:32s} dual of {arch}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylsolids",
        description="Generate Platonic/Archimedean solids as group orbits and "
                    "build their Catalan duals.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit the mesh of a registry solid")
    gen.add_argument("solid")
    gen.add_argument("--format", choices=("off", "obj", "json"), default="off")
    gen.add_argument("--out", default=None)
    gen.set_defaults(func=_cmd_generate)

    du = sub.add_parser("dual", help="emit the Catalan dual of an Archimedean solid")
    du.add_argument("solid")
    du.add_argument("--format", choices=("off", "obj", "json"), default="off")
    du.add_argument("--out", default=None)
    du.set_defaults(func=_cmd_dual)

    rep = sub.add_parser("report", help="print the dual report of a Catalan solid")
    rep.add_argument("solid")
    rep.add_argument("--format", choices=("text", "json"), default="text")
    rep.add_argument("--out", default=None)
    rep.set_defaults(func=_cmd_report)

    ver = sub.add_parser("verify", help="run the invariant suite")
    ver.add_argument("solid", nargs="?", default=None)
    ver.add_argument("--all", action="store_true")
    ver.set_defaults(func=_cmd_verify)

    ls = sub.add_parser("list", help="list solid names with diagram and weight")
    ls.set_defaults(func=_cmd_list)
    return parser


def run_cli(argv: Sequence[str] | None = None) -> int:
    """Entry point used by tests and main(); returns the process exit code."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code is None else int(exc.code)
    try:
        return ns.func(ns)
    except UnknownSolidError as exc:
        print(str(exc), file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))

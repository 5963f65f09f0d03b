"""Catalan solids as duals of the Archimedean orbits.

Every face of a Catalan solid lies in the plane orthogonal to one vertex q of
its Archimedean partner.  The construction therefore never needs an explicit
dual operation: classify the face centers around the highest-weight vertex by
fundamental orbit, keep one orbit at its registry scale, and solve the scale
of each remaining orbit so that its scaled center lands in the reference
plane.  The union of the scaled fundamental orbits is the Catalan vertex set.

The geometric dual is scale-free; the reference registry only pins the
normalization under which the classical coordinates and sphere radii come out
in their familiar printed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .quat import EPS_DEDUP, SIGMA, TAU, Quaternion, dot
from .groups import weyl_group
from .orbits import (ARCHIMEDEAN, FUNDAMENTAL_LABELS, SOLIDS, UnknownSolidError,
                     Weight, fundamental_orbits, named_solid, weight_vector)
from .mesh import Polyhedron, build_mesh

CLASSIFY_TOL = 1e-8     # direction match against fundamental-orbit members
ORTHO_TOL = 1e-9        # face-plane flatness against the dual vertex
DIHEDRAL_TOL_DEG = 0.5 / 3600.0   # max spread of the dihedral across edges


class FaceClassificationError(RuntimeError):
    """A face center is not parallel to any fundamental-orbit member."""


class SingularConfigurationError(ValueError):
    """Scale condition with a vanishing denominator."""


class DualConstructionError(RuntimeError):
    """The assembled dual violates a structural invariant."""


class DualityViolationError(RuntimeError):
    """Counts or dihedral uniformity contradict a dual pair."""


ARCH_TO_CATALAN = {
    "truncated-tetrahedron": "triakis-tetrahedron",
    "cuboctahedron": "rhombic-dodecahedron",
    "truncated-octahedron": "tetrakis-hexahedron",
    "truncated-cube": "triakis-octahedron",
    "small-rhombicuboctahedron": "deltoidal-icositetrahedron",
    "great-rhombicuboctahedron": "disdyakis-dodecahedron",
    "icosidodecahedron": "rhombic-triacontahedron",
    "truncated-dodecahedron": "triakis-icosahedron",
    "truncated-icosahedron": "pentakis-dodecahedron",
    "small-rhombicosidodecahedron": "deltoidal-hexacontahedron",
    "great-rhombicosidodecahedron": "disdyakis-triacontahedron",
}

CATALAN_TO_ARCH = {cat: arch for arch, cat in ARCH_TO_CATALAN.items()}

CATALAN_NAMES = tuple(ARCH_TO_CATALAN[a] for a in ARCHIMEDEAN)

# Fundamental-orbit members are quoted in the classical coordinates at these
# multiples of the raw orbit; scale factors are ratios against these forms.
CANONICAL_ORBIT_SCALE = {
    "A3": {"100": 1.0, "010": 1.0, "001": 1.0},
    "B3": {"100": 1.0, "010": 1.0, "001": math.sqrt(2.0)},
    "H3": {"100": 2.0, "010": 1.0, "001": 2.0},
}

# Which orbit each Catalan solid keeps at a fixed scale (applied to the
# canonical form); the remaining orbit scales are solved, not looked up.
REFERENCE_ORBIT = {
    "triakis-tetrahedron": ("001", 1.0),
    "rhombic-dodecahedron": ("100", 1.0),
    "tetrakis-hexahedron": ("001", 1.0),
    "triakis-octahedron": ("100", 1.0),
    "deltoidal-icositetrahedron": ("100", 1.0),
    "disdyakis-dodecahedron": ("100", 1.0),
    "rhombic-triacontahedron": ("100", TAU / 3.0),
    "triakis-icosahedron": ("001", 1.0),
    "pentakis-dodecahedron": ("100", 1.0),
    "deltoidal-hexacontahedron": ("010", 1.0),
    "disdyakis-triacontahedron": ("010", 1.0),
}


@dataclass(frozen=True)
class DualReport:
    name: str
    archimedean: str
    scale_factors: dict[str, float]
    radii: tuple[tuple[str, float, int], ...]   # (orbit label, radius, vertex count)
    dihedral_deg: float
    counts: tuple[int, int, int]                # (V, E, F)


@lru_cache(maxsize=None)
def _canonical_members(diagram: str) -> dict[str, tuple[Quaternion, ...]]:
    scales = CANONICAL_ORBIT_SCALE[diagram]
    return {label: tuple(v.scale(scales[label]) for v in orb.vectors)
            for label, orb in fundamental_orbits(diagram).items()}


def _face_mesh_directions(diagram: str) -> list[Quaternion]:
    dirs = []
    for orb in fundamental_orbits(diagram).values():
        for v in orb.vectors:
            dirs.append(v)
            dirs.append(-v)
    return dirs


@lru_cache(maxsize=None)
def solid_mesh(name: str) -> Polyhedron:
    """Mesh of a registry orbit solid, faces found via fundamental directions."""
    w, orb = named_solid(name)
    return build_mesh(orb.vectors, face_directions=_face_mesh_directions(w.diagram))


def classify_direction(v: Quaternion, diagram: str) -> tuple[str, Quaternion]:
    """Fundamental-orbit label and canonical member parallel to v."""
    unit = v.normalized()
    for label in FUNDAMENTAL_LABELS:
        for member in _canonical_members(diagram)[label]:
            if unit.approx_eq(member.normalized(), CLASSIFY_TOL):
                return label, member
    raise FaceClassificationError(
        f"direction {v!r} is not parallel to any fundamental-orbit member of {diagram}")


def _classified_incident(arch: Polyhedron, q: Quaternion, diagram: str):
    index = {v.key(): i for i, v in enumerate(arch.vertices)}
    vi = index.get(q.key())
    if vi is None:
        raise LookupError(f"{q!r} is not a vertex of the mesh")
    out = []
    for fi, face in enumerate(arch.faces):
        if vi in face:
            centroid = arch.face_centroid(fi)
            label, member = classify_direction(centroid, diagram)
            out.append((fi, centroid, label, member))
    return out


def incident_face_centers(arch: Polyhedron, q: Quaternion,
                          diagram: str) -> list[tuple[int, Quaternion, str]]:
    """Faces containing vertex q: (face index, centroid, fundamental-orbit label)."""
    return [(fi, centroid, label)
            for fi, centroid, label, _ in _classified_incident(arch, q, diagram)]


def solve_scale(center_dir: Quaternion, reference: Quaternion, q: Quaternion) -> float:
    """Scale placing center_dir in the plane through `reference` orthogonal to q."""
    denom = dot(center_dir, q)
    if abs(denom) <= 1e-12:
        raise SingularConfigurationError(
            "face-center direction is orthogonal to the dual vertex")
    return dot(reference, q) / denom


def dihedral_angle(arch: Polyhedron, catalan: Polyhedron) -> float:
    """Common dihedral angle of the Catalan solid, in degrees.

    For adjacent Archimedean vertices q, q' the dual faces meet at
    180 deg - angle(q, q'); the value must agree across every edge.
    """
    if (len(catalan.vertices) != len(arch.faces)
            or len(catalan.faces) != len(arch.vertices)
            or len(catalan.edges) != len(arch.edges)):
        raise DualityViolationError("meshes do not have dual counts")
    angles = []
    for i, j in arch.edges:
        p, r = arch.vertices[i], arch.vertices[j]
        c = dot(p, r) / (p.norm() * r.norm())
        c = max(-1.0, min(1.0, c))
        angles.append(180.0 - math.degrees(math.acos(c)))
    spread = max(angles) - min(angles)
    if spread > DIHEDRAL_TOL_DEG:
        raise DualityViolationError(
            f"dihedral angle varies by {spread * 3600.0:.3f} arcsec across edges")
    return sum(angles) / len(angles)


def sphere_radii(report: DualReport) -> list[tuple[str, float]]:
    """Per-orbit vertex sphere radii of a Catalan solid."""
    return [(label, radius) for label, radius, _ in report.radii]


def dual(arch_name: str) -> tuple[Polyhedron, DualReport]:
    """Catalan dual of a registry Archimedean solid."""
    if arch_name not in ARCH_TO_CATALAN:
        raise UnknownSolidError(arch_name, tuple(ARCH_TO_CATALAN))
    return _dual_cached(arch_name)


@lru_cache(maxsize=None)
def _dual_cached(arch_name: str) -> tuple[Polyhedron, DualReport]:
    _, orb = named_solid(arch_name)
    return dual_from_points(arch_name, orb.vectors)


def dual_from_points(arch_name: str,
                     points: Iterable[Quaternion]) -> tuple[Polyhedron, DualReport]:
    """Dual construction on an explicit (possibly rescaled) Archimedean orbit.

    Scale factors and the dihedral angle depend only on ratios, so a uniformly
    rescaled input yields the same report up to the vertex radii.
    """
    if arch_name not in ARCH_TO_CATALAN:
        raise UnknownSolidError(arch_name, tuple(ARCH_TO_CATALAN))
    catalan_name = ARCH_TO_CATALAN[arch_name]
    diagram, coeffs, _ = SOLIDS[arch_name]
    points = tuple(points)

    hw = weight_vector(Weight(diagram, *coeffs))
    scale = points[0].norm() / hw.norm()
    arch = build_mesh(points, face_directions=_face_mesh_directions(diagram))

    hw_unit = hw.normalized()
    q = max(arch.vertices, key=lambda v: dot(v.normalized(), hw_unit))
    if dot(q.normalized(), hw_unit) < 1.0 - 1e-9:
        raise DualConstructionError(
            f"no vertex of {arch_name} is parallel to its highest weight")

    incident = _classified_incident(arch, q, diagram)
    ref_label, ref_scale = REFERENCE_ORBIT[catalan_name]
    labels = [lb for lb in FUNDAMENTAL_LABELS
              if any(label == lb for _, _, label, _ in incident)]
    if ref_label not in labels:
        raise DualConstructionError(
            f"reference orbit {ref_label} has no face at the highest weight of {arch_name}")

    ref_member = next(m for _, _, label, m in incident if label == ref_label)
    reference = ref_member.scale(ref_scale * scale)

    factors: dict[str, float] = {ref_label: ref_scale}
    for _, _, label, member in incident:
        lam = solve_scale(member.scale(scale), reference, q)
        if label in factors:
            if abs(lam - factors[label]) > 1e-9:
                raise DualConstructionError(
                    f"inconsistent scale for orbit {label}: {lam} vs {factors[label]}")
        else:
            factors[label] = lam

    members = _canonical_members(diagram)
    cat_points: list[Quaternion] = []
    radii = []
    for label in FUNDAMENTAL_LABELS:
        if label not in factors:
            continue
        lam = factors[label]
        scaled = [m.scale(lam * scale) for m in members[label]]
        cat_points.extend(scaled)
        radii.append((label, scaled[0].norm(), len(scaled)))

    cat = build_mesh(cat_points, face_directions=arch.vertices)
    _validate_dual(arch, cat)
    theta = dihedral_angle(arch, cat)
    report = DualReport(name=catalan_name, archimedean=arch_name,
                        scale_factors=factors, radii=tuple(radii),
                        dihedral_deg=theta, counts=cat.counts)
    return cat, report


def _validate_dual(arch: Polyhedron, cat: Polyhedron) -> None:
    if len(cat.vertices) != len(arch.faces) or len(cat.faces) != len(arch.vertices) \
            or len(cat.edges) != len(arch.edges):
        raise DualConstructionError(
            f"count duality violated: arch {arch.counts} vs catalan {cat.counts}")
    # every Catalan face must be flat against its Archimedean vertex direction
    dirs = [v.normalized() for v in arch.vertices]
    for face, normal in zip(cat.faces, cat.face_normals):
        axis = max(dirs, key=lambda d: dot(d, normal))
        if dot(axis, normal) < 1.0 - 1e-6:
            raise DualConstructionError("catalan face normal matches no dual vertex")
        offsets = [dot(cat.vertices[i], axis) for i in face]
        if max(offsets) - min(offsets) > ORTHO_TOL:
            raise DualConstructionError(
                "catalan face is not orthogonal to its dual vertex")


def degrees_to_dms(deg: float) -> tuple[int, int, int]:
    """Whole degrees/minutes/seconds with seconds rounded to nearest integer."""
    total = round(deg * 3600.0)
    return (total // 3600, (total % 3600) // 60, total % 60)


def format_dms(deg: float, ascii_suffixes: bool = True) -> str:
    d, m, s = degrees_to_dms(deg)
    if ascii_suffixes:
        return f"{d}d{m}m{s}s"
    return f"{d}\N{DEGREE SIGN}{m}\N{PRIME}{s}\N{DOUBLE PRIME}"


def polygon_shape(p: Polyhedron, face_index: int, tol: float = EPS_DEDUP) -> str:
    """Shape class of a face from its cyclic side lengths."""
    face = p.faces[face_index]
    n = len(face)
    sides = [(p.vertices[a] - p.vertices[b]).norm()
             for a, b in zip(face, face[1:] + face[:1])]
    equal = [abs(sides[i] - sides[(i + 1) % n]) <= tol for i in range(n)]
    if n == 3:
        if all(equal):
            return "equilateral-triangle"
        if any(equal):
            return "isosceles-triangle"
        return "scalene-triangle"
    if n == 4:
        if all(equal):
            diag1 = (p.vertices[face[0]] - p.vertices[face[2]]).norm()
            diag2 = (p.vertices[face[1]] - p.vertices[face[3]]).norm()
            return "square" if abs(diag1 - diag2) <= tol else "rhombus"
        # kite: two pairs of equal adjacent sides
        for start in range(2):
            a, b, c, d = (sides[(start + k) % 4] for k in range(4))
            if abs(a - b) <= tol and abs(c - d) <= tol:
                return "kite"
        return "quadrilateral"
    if all(equal):
        return f"regular-{n}-gon"
    return f"{n}-gon"

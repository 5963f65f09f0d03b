import io
import json
import math

import pytest

from weylsolids.quat import pure
from weylsolids.mesh import build_mesh, euler_characteristic
from weylsolids.catalan import dual, solid_mesh
from weylsolids.cli_io import (ReportDocument, build_report, export_obj,
                               export_off, parse_off, run_cli, verify_solid)


def off_text(p):
    buf = io.StringIO()
    export_off(p, buf)
    return buf.getvalue()


def obj_text(p):
    buf = io.StringIO()
    export_obj(p, buf)
    return buf.getvalue()


def test_off_cube_header():
    text = off_text(solid_mesh("cube"))
    lines = text.splitlines()
    assert lines[0] == "OFF"
    assert lines[1] == "8 6 12"
    assert text.endswith("\n")
    assert "\r" not in text


def test_off_triakis_tetrahedron_header():
    cat, _ = dual("truncated-tetrahedron")
    assert off_text(cat).splitlines()[1] == "8 12 18"


def test_off_disdyakis_triacontahedron_header():
    cat, _ = dual("great-rhombicosidodecahedron")
    assert off_text(cat).splitlines()[1] == "62 120 180"


def test_obj_tetrahedron():
    text = obj_text(solid_mesh("tetrahedron"))
    lines = text.splitlines()
    assert sum(1 for ln in lines if ln.startswith("v ")) == 4
    assert sum(1 for ln in lines if ln.startswith("f ")) == 4


def test_obj_pentakis_dodecahedron():
    cat, _ = dual("truncated-icosahedron")
    lines = obj_text(cat).splitlines()
    assert sum(1 for ln in lines if ln.startswith("v ")) == 32
    assert sum(1 for ln in lines if ln.startswith("f ")) == 60


def test_obj_rhombic_triacontahedron():
    cat, _ = dual("icosidodecahedron")
    lines = obj_text(cat).splitlines()
    assert sum(1 for ln in lines if ln.startswith("v ")) == 32
    assert sum(1 for ln in lines if ln.startswith("f ")) == 30


def test_export_returns_bytes_written(tmp_path):
    p = solid_mesh("cube")
    dest = tmp_path / "cube.off"
    n = export_off(p, dest)
    assert n == len(dest.read_bytes())


def test_export_deterministic():
    p1 = solid_mesh("truncated-icosahedron")
    assert off_text(p1) == off_text(p1)
    assert obj_text(p1) == obj_text(p1)


def test_off_roundtrip():
    for name in ("cube", "icosidodecahedron"):
        p = solid_mesh(name)
        verts, faces = parse_off(off_text(p))
        assert len(verts) == len(p.vertices)
        assert len(faces) == len(p.faces)
        rebuilt = build_mesh([pure(*v) for v in verts])
        assert euler_characteristic(rebuilt) == 2
        assert rebuilt.faces == p.faces
        assert rebuilt.counts == p.counts


def test_report_document_json_roundtrip():
    doc = build_report("rhombic-dodecahedron")
    parsed = json.loads(doc.to_json())
    assert parsed["name"] == "rhombic-dodecahedron"
    assert parsed["archimedean"] == "cuboctahedron"
    assert parsed["counts"] == {"vertices": 14, "edges": 24, "faces": 12}
    assert parsed["dihedral_dms"] == "120d0m0s"
    # 12-significant-digit round trip
    assert parsed["dihedral_degrees"] == pytest.approx(doc.dihedral_degrees, rel=1e-11)
    for entry in parsed["radii"]:
        match = [r for lb, r, n in doc.radii if lb == entry["orbit"]]
        assert entry["radius"] == pytest.approx(match[0], rel=1e-11)
    assert doc.to_json() == doc.to_json()
    assert all(parsed["checks"].values())


def test_report_text_contains_dms():
    doc = build_report("rhombic-dodecahedron")
    assert "dihedral: 120°0′0″" in doc.to_text()


def test_verify_solid_checks():
    results = verify_solid("cube")
    assert all(ok for _, ok, _ in results)
    results = verify_solid("disdyakis-triacontahedron")
    assert all(ok for _, ok, _ in results)


def test_run_cli_generate(capsys):
    assert run_cli(["generate", "cube", "--format", "off"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "OFF"
    assert out.splitlines()[1] == "8 6 12"


def test_run_cli_generate_json(capsys):
    assert run_cli(["generate", "octahedron", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["counts"] == {"vertices": 6, "edges": 12, "faces": 8}
    assert doc["diagram"] == "B3"
    assert doc["weight"] == [1, 0, 0]


def test_run_cli_dual(capsys):
    assert run_cli(["dual", "cuboctahedron", "--format", "obj"]) == 0
    out = capsys.readouterr().out
    assert sum(1 for ln in out.splitlines() if ln.startswith("v ")) == 14


def test_run_cli_report(capsys):
    assert run_cli(["report", "rhombic-dodecahedron"]) == 0
    out = capsys.readouterr().out
    assert "dihedral: 120°0′0″" in out


def test_run_cli_report_json(capsys):
    assert run_cli(["report", "triakis-tetrahedron", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["dihedral_dms"] == "129d31m16s"
    assert doc["scale_factors"]["100"] == pytest.approx(0.6, abs=1e-9)


def test_run_cli_unknown_solid(capsys):
    assert run_cli(["generate", "cubee"]) == 2
    err = capsys.readouterr().err
    assert "cube" in err


def test_run_cli_usage_error():
    assert run_cli(["generate", "cube", "--format", "stl"]) == 2
    assert run_cli([]) == 2


def test_run_cli_verify_single(capsys):
    assert run_cli(["verify", "rhombic-triacontahedron"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out


def test_run_cli_verify_all(capsys):
    assert run_cli(["verify", "--all"]) == 0
    out = capsys.readouterr().out
    assert "27 solids checked, 0 failures" in out
    assert sum(1 for ln in out.splitlines() if ln.startswith("PASS")) == 27


def test_run_cli_list(capsys):
    assert run_cli(["list"]) == 0
    out = capsys.readouterr().out
    assert "tetrahedron" in out
    assert "great-rhombicosidodecahedron" in out
    assert "disdyakis-triacontahedron" in out


def test_run_cli_out_file(tmp_path):
    dest = tmp_path / "mesh.off"
    assert run_cli(["generate", "icosahedron", "--out", str(dest)]) == 0
    verts, faces = parse_off(dest.read_text())
    assert (len(verts), len(faces)) == (12, 20)


def test_cli_byte_identical(capsys):
    run_cli(["dual", "truncated-icosahedron", "--format", "json"])
    first = capsys.readouterr().out
    run_cli(["dual", "truncated-icosahedron", "--format", "json"])
    second = capsys.readouterr().out
    assert first == second

"""Command-line contract: exit codes, output formats, determinism, figures."""

import io
import json
import subprocess
import sys

import pytest

from hfx.cli import run_command


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def entry_file(tmp_path):
    def write(name):
        path = tmp_path / f"{name}.hfx"
        code, _, err = run(["catalog", name, "-o", str(path)])
        assert code == 0, err
        return str(path)
    return write


def test_audit_exit_zero_on_all_pass(entry_file):
    code, out, _ = run(["audit", entry_file("z3-endo")])
    assert code == 0
    assert "delta_mult           pass" in out


def test_audit_exit_one_names_delta_mult_with_witness(entry_file):
    code, out, _ = run(["audit", entry_file("z2-delta")])
    assert code == 1
    assert "delta_mult           fail" in out
    assert "witness [e(0;0), e(0;0)]" in out


def test_audit_missing_file_exit_two():
    code, _, err = run(["audit", "nosuch.hfx"])
    assert code == 2
    assert err.startswith("E_PARSE")


def test_audit_axiom_selection(entry_file):
    path = entry_file("z2-delta")
    code, out, _ = run(["audit", path, "--axioms", "assoc,unit_left"])
    assert code == 0  # the failing axioms were not requested
    assert "delta_mult" not in out
    code, _, err = run(["audit", path, "--axioms", "bogus"])
    assert code == 2
    assert err.startswith("E_NAME")


def test_audit_witness_cap(entry_file):
    path = entry_file("z2-delta")
    _, out, _ = run(["audit", path, "--json", "--witness-cap", "1"])
    doc = json.loads(out)
    assert len(doc["audits"]["delta_mult"]["witnesses"]) == 1


def test_validate_exit_codes(tmp_path, entry_file):
    assert run(["validate", entry_file("fibonacci")])[0] == 0
    bad = tmp_path / "bad.hfx"
    bad.write_text("mode vertex\n[objects]\nI 1\nx 1\n[p]\nunit I\n"
                   "I x x 2\n[q]\nunit I\n", encoding="utf-8")
    code, out, _ = run(["validate", str(bad)])
    assert code == 1
    assert "C1.p: fail" in out


def test_validate_graph_and_face(entry_file, tmp_path):
    assert run(["validate", entry_file("graph-2v")])[0] == 0
    face = tmp_path / "face.hfx"
    face.write_text("mode face\nmaxdeg 2\n[cells]\nx 1 1 1 1\nxx 1 1 2 1\n"
                    "[p]\nx x xx 1\n[q]\nx x xx 1\n", encoding="utf-8")
    code, out, _ = run(["validate", str(face)])
    assert code == 0 and "ok:" in out
    bad = tmp_path / "badface.hfx"
    bad.write_text("mode face\nmaxdeg 2\n[cells]\nx 1 2 1 1\nxx 1 1 2 1\n"
                   "[p]\nx x xx 1\n[q]\n", encoding="utf-8")
    code, _, err = run(["validate", str(bad)])
    assert code == 2
    assert err.startswith("E_CELL")


def test_build_prints_dimensions(entry_file):
    code, out, _ = run(["build", entry_file("graph-2v")])
    assert code == 0
    assert "basis: 16 elements" in out
    assert "0:4 1:4 2:4 3:4" in out


def test_table_mul_and_comul(entry_file):
    path = entry_file("z2-delta")
    code, out, _ = run(["table", path, "--op", "mul"])
    assert code == 0
    assert "e(1;0) * e(1;1) = e(0;1)" in out
    code, out, _ = run(["table", path, "--op", "comul"])
    assert "e(0;1) -> e(0;0)(x)e(0;1) + e(0;1)(x)e(1;1)" in out


def test_export_document_shape(entry_file, tmp_path):
    outfile = tmp_path / "z2.json"
    code, _, _ = run(["export", entry_file("z2-delta"), "-o", str(outfile)])
    assert code == 0
    doc = json.loads(outfile.read_text(encoding="utf-8"))
    assert set(doc) >= {"basis", "mul", "comul", "counit", "unit", "audits",
                        "contractions"}
    assert len(doc["basis"]) == 4
    assert len(doc["mul"]) == 16
    assert all(row[3] == "1" for row in doc["mul"])
    assert doc["audits"]["delta_mult"]["status"] == "fail"
    assert doc["contractions"]["C3"]["status"] == "fail"


def test_export_fibonacci_contains_pinned_row(entry_file, tmp_path):
    outfile = tmp_path / "fib.json"
    run(["export", entry_file("fibonacci"), "-o", str(outfile)])
    doc = json.loads(outfile.read_text(encoding="utf-8"))
    assert ["e(x;x)", "e(x;x)", "e(I;I)", "1"] in doc["mul"]


def test_catalog_unknown_name_exit_two():
    code, _, err = run(["catalog", "nosuch"])
    assert code == 2
    assert err.startswith("E_NAME")


def test_report_writes_tsv_and_figures(entry_file, tmp_path):
    outdir = tmp_path / "rpt"
    code, out, _ = run(["report", entry_file("graph-1loop"),
                        "--outdir", str(outdir)])
    assert code == 0
    tsv = (outdir / "summary.tsv").read_text(encoding="utf-8").splitlines()
    assert tsv[0] == "kind\tcheck\tstatus\tdetail"
    assert any(line.startswith("audit\tdelta_unit\tpass") for line in tsv)
    for name in ("checks.png", "mul_table.png", "degree_dims.png"):
        assert (outdir / name).stat().st_size > 0


def test_json_outputs_are_byte_identical_across_processes(entry_file):
    """Hash randomization must not leak into the report (fresh interpreters)."""
    path = entry_file("z2-delta")
    outputs = []
    for seed in ("0", "42"):
        proc = subprocess.run(
            [sys.executable, "-m", "hfx", "audit", path, "--json"],
            capture_output=True, env={"PYTHONHASHSEED": seed, "PATH": ""},
        )
        assert proc.returncode == 1
        outputs.append(proc.stdout)
    assert outputs[0] == outputs[1]


def test_bad_usage_exit_two():
    assert run(["frobnicate"])[0] == 2
    assert run([])[0] == 2


def test_exit_codes_match_expectation_matrix(entry_file):
    from hfx import catalog_get, catalog_names
    for name in catalog_names():
        expected = dict(catalog_get(name).expected)
        any_audit_fail = any(
            status == "fail" for key, status in expected.items()
            if not key.startswith("C"))
        code, _, _ = run(["audit", entry_file(name)])
        assert code == (1 if any_audit_fail else 0), name

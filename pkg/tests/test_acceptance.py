"""Acceptance suite: one test per criterion, each printing a status line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines alongside pytest's own verdicts. All comparisons are exact; there are
no tolerances anywhere.
"""

import subprocess
import sys
import time

import pytest

from hfx import (AlgebraPresentation, Element, TensorElement, bid,
                 build_antipode, build_hall_fusion, catalog_get,
                 catalog_names, graph_to_procategory,
                 replay_face_witness, replay_witness)
from hfx.audits import (audit_antipode, audit_bialgebra_compat,
                        audit_coalgebra, audit_algebra)
from hfx.core import delta3, endo_slot, mu3
from hfx.face import ProcategoryDimData, OneCell, build_face_algebra, audit_face

from randomsuite import run_suite
from test_vertex import transpose_checks, with_p_entry


def note(line):
    print(f"\nACCEPTANCE {line}")


# -- criterion 1: the expectation matrix, with its pinned point values ----------

def test_criterion_1_expectation_matrix(catalog_audits):
    for name, (entry, alg, audit, contractions) in catalog_audits.items():
        got = dict(audit.statuses())
        if contractions is not None:
            got.update(contractions.statuses())
        assert got == dict(entry.expected), name

    # z2-delta point values
    entry, alg, audit, con = catalog_audits["z2-delta"]
    w = audit["delta_mult"].witnesses[0]
    assert w.inputs == (bid("0", "0"), bid("0", "0"))
    key = (bid("0", "0"), bid("0", "0"))
    assert w.lhs[key] == 1 and w.rhs[key] == 2
    assert audit["antipode_antihom"].status == "pass"
    spec = entry.spec
    s = build_antipode(spec)
    vn = audit_antipode(alg, s, witness_cap=10)["von_neumann"]
    assert len(vn.witnesses) == 4
    assert all(w.lhs == 4 * Element.basis(w.inputs[0]) for w in vn.witnesses)
    c3 = {v.index: (v.lhs, v.rhs) for v in con["C3"].values}
    for u in ("0", "1"):
        for v in ("0", "1"):
            assert c3[(u, v)] == ((2, 1) if u == v else (0, 0))
    c6 = {v.index: (v.lhs, v.rhs) for v in con["C6"].values}
    for side in ("upper", "lower"):
        for a in ("0", "1"):
            for x in ("0", "1"):
                assert c6[(side, a, x)] == ((2, 1) if a == x else (0, 0))

    # z3-endo: everything passes, pinned coefficients
    entry, alg, audit, con = catalog_audits["z3-endo"]
    assert audit.all_pass() and con.all_pass()
    assert con["C3"].values[0].lhs == 9
    e = Element.basis(bid("*", "*"))
    s = build_antipode(entry.spec)
    assert mu3(endo_slot(delta3(e, alg), s, 1), alg) == e  # vn coefficient 1

    # fibonacci point values
    entry, alg, audit, con = catalog_audits["fibonacci"]
    assert audit["eps_mult"].status == "fail"
    wide = audit_bialgebra_compat(alg, witness_cap=10)["eps_mult"]
    pinned = [w for w in wide.witnesses
              if w.inputs == (bid("x", "I"), bid("x", "x"))]
    assert pinned and pinned[0].lhs == 1 and pinned[0].rhs == 0
    assert {v.index: v.lhs for v in con["C3"].values}[("I", "I")] == 2
    c6 = {v.index: (v.lhs, v.rhs) for v in con["C6"].values}
    assert c6[("upper", "I", "I")] == (2, 1)
    assert audit["antipode_antihom"].status == "pass"

    # graph-2v: per-degree dims
    entry, alg, audit, _ = catalog_audits["graph-2v"]
    per = {}
    for b in alg.basis:
        per[alg.degree[b]] = per.get(alg.degree[b], 0) + 1
    assert [per[d] for d in sorted(per)] == [4, 4, 4, 4]
    assert audit["delta_unit"].status == "fail"

    # graph-1loop: all pass, grouplike rows up to degree 3
    entry, alg, audit, _ = catalog_audits["graph-1loop"]
    assert audit.all_pass()
    for n in (1, 2, 3):
        b = bid("x" * n, "x" * n)
        assert alg.comul[b] == TensorElement(2, {(b, b): 1})

    # trivial: all pass
    entry, _, audit, con = catalog_audits["trivial"]
    assert audit.all_pass() and con.all_pass()
    note("1 (expectation matrix reproduced exactly): PASS")


# -- criterion 2: randomized criterion-sufficiency suite -------------------------

@pytest.fixture(scope="module")
def random_results():
    start = time.time()
    results = run_suite(count=220)
    elapsed = time.time() - start
    return results, elapsed


def test_criterion_2_randomized_sufficiency(random_results):
    results, _ = random_results
    assert len(results) >= 200
    for r in results:
        if r.c1 and r.c2:
            assert r.algebra_ok, r.label
        if r.c1 and r.c3:
            assert r.delta_mult_ok, r.label
        assert r.c4 == r.eps_mult_ok, r.label
    fired_c2 = sum(1 for r in results if r.c1 and r.c2)
    fired_c3 = sum(1 for r in results if r.c1 and r.c3)
    assert fired_c2 >= 40 and fired_c3 >= 7
    note(f"2 (randomized suite, {len(results)} instances, "
         f"C2-premise fired {fired_c2}x, C3-premise fired {fired_c3}x): PASS")


# -- criterion 3: structural invariants ------------------------------------------

def test_criterion_3_structural_invariants(catalog_audits, random_results):
    results, _ = random_results
    vertex_algs = []
    for name in catalog_names():
        entry, alg, audit, _ = catalog_audits[name]
        if entry.kind == "vertex":
            vertex_algs.append((entry.spec, alg))
        # counit laws hold for every catalog build, graded ones included
        assert audit["counit_left"].status == "pass"
        assert audit["counit_right"].status == "pass"
    for r in results[::9]:
        vertex_algs.append((r.spec, r.alg))
    for spec, alg in vertex_algs:
        n = len(spec.category.objects)
        assert len(alg.basis) == n * n
        for b in alg.basis:
            row = alg.comul[b]
            assert len(row.coeffs) == n
            assert all(v == 1 for v in row.coeffs.values())
        assert audit_coalgebra(alg, witness_cap=1).all_pass()
    for name in ("trivial", "z2-delta", "z3-delta", "z2-endo", "z3-endo",
                 "fibonacci", "ising"):
        transpose_checks(catalog_audits[name][0].spec)
    note(f"3 (structural invariants on {len(vertex_algs)} built algebras, "
         "transpose duality on the catalog): PASS")


# -- criterion 4: witness soundness ----------------------------------------------

def corrupted_face():
    cells = (OneCell("x", "1", "1", 1), OneCell("xx", "1", "1", 2))
    pc = ProcategoryDimData(("1",), cells, {("x", "x", "xx"): 2},
                            {("x", "x", "xx"): 1})
    alg = build_face_algebra(pc, 2)
    return alg, audit_face(alg, pc), pc


def test_criterion_4_witness_soundness(catalog_audits, random_results):
    results, _ = random_results
    collected = []  # (report, alg, s, pc)
    for name in catalog_names():
        entry, alg, audit, _ = catalog_audits[name]
        s = build_antipode(entry.spec) if entry.kind == "vertex" else None
        pc = (graph_to_procategory(entry.graph, entry.max_degree)
              if entry.kind == "graph" else None)
        collected.append((audit, alg, s, pc))
    for r in results:
        for report in r.reports:
            collected.append((report, r.alg, None, None))
    # hand-corrupted negatives
    spec = with_p_entry(catalog_get("z2-delta").spec, ("0", "1", "1"), 2)
    alg = build_hall_fusion(spec)
    collected.append((audit_algebra(alg), alg, None, None))
    e = bid("g", "g")
    broken = AlgebraPresentation(
        basis=(e,), mul={(e, e): Element.basis(e)},
        comul={e: TensorElement(2, {(e, e): 1})},
        unit=Element.basis(e), counit={e: 0})
    collected.append((audit_coalgebra(broken), broken, None, None))
    alg, report, pc = corrupted_face()
    collected.append((report, alg, None, pc))

    replayed = 0
    for report, alg, s, pc in collected:
        for check in report.checks:
            assert (check.status == "fail") == bool(check.witnesses)
            for w in check.witnesses:
                if check.axiom.startswith(("vacuum_", "face_")):
                    lhs, rhs = replay_face_witness(w, alg, pc)
                else:
                    lhs, rhs = replay_witness(w, alg, s)
                assert (lhs, rhs) == (w.lhs, w.rhs), (check.axiom, w.inputs)
                assert lhs != rhs
                replayed += 1
    assert replayed > 150
    note(f"4 (witness soundness, {replayed} fail witnesses replayed): PASS")


# -- criterion 5: determinism and exactness --------------------------------------

_RENDER_ALL = """
import sys
from hfx import catalog_get, catalog_names, audit_catalog_entry
from hfx.reporting import render_export
for name in catalog_names():
    alg, audit, con = audit_catalog_entry(catalog_get(name))
    sys.stdout.write(render_export(alg, audit, con))
"""


def test_criterion_5_determinism_and_exactness(catalog_audits):
    outputs = []
    for seed in ("0", "4242"):
        proc = subprocess.run([sys.executable, "-c", _RENDER_ALL],
                              capture_output=True,
                              env={"PYTHONHASHSEED": seed, "PATH": ""})
        assert proc.returncode == 0, proc.stderr.decode()
        outputs.append(proc.stdout)
    assert outputs[0] == outputs[1]

    for name in ("z2-delta", "graph-2v", "graph-1loop"):
        alg = catalog_audits[name][1]
        for prod in alg.mul.values():
            assert all(v.denominator == 1 for v in prod.coeffs.values())
        for t in alg.comul.values():
            assert all(v.denominator == 1 for v in t.coeffs.values())
        assert all(v.denominator == 1 for v in alg.unit.coeffs.values())
    note(f"5 (byte-identical reports, {len(outputs[0])} bytes; "
         "denominator-1 scalars): PASS")


# -- criterion 6: runtime ---------------------------------------------------------

def test_criterion_6_runtime(random_results):
    from hfx import audit_catalog_entry
    start = time.time()
    for name in catalog_names():
        audit_catalog_entry(catalog_get(name))
    catalog_elapsed = time.time() - start
    assert catalog_elapsed < 10.0
    _, random_elapsed = random_results
    assert random_elapsed < 60.0
    note(f"6 (runtime: catalog {catalog_elapsed:.2f}s < 10s, randomized "
         f"{random_elapsed:.2f}s < 60s): PASS")

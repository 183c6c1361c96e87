"""Built-in example generators and their pinned audit expectations.

Every entry carries the full map of expected statuses for each check the
audit suite emits on it; the regression suite replays the live audits
against these matrices. The expectations were derived by independent
brute-force expansion of the defining formulas before this package was
written; they are data, not code, so new entries can be added freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .errors import GroupError, NameError_, RangeError, UnitError
from .face import DirectedGraph, graph_to_procategory, full_face_audit
from .vertex import (AntipodeMap, DimCategory, HallFusionSpec,
                     PromonoidalDimData, full_vertex_audit)

VERTEX_AXIOMS = ("assoc", "unit_left", "unit_right",
                 "coassoc", "counit_left", "counit_right",
                 "delta_mult", "eps_mult", "delta_unit", "delta_unit_weak",
                 "antipode_antihom", "antipode_unit", "antipode_involution",
                 "von_neumann")
VERTEX_CONDS = ("C1.p", "C2.p", "C1.q", "C2.q", "C3", "C4", "C5", "C6")
FACE_AXIOMS = ("assoc", "unit_left", "unit_right",
               "coassoc", "counit_left", "counit_right",
               "delta_mult", "eps_mult", "delta_unit", "delta_unit_weak",
               "vacuum_orth", "face_row_proj", "face_col_proj",
               "face_unit_sum")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str                      # "vertex" | "graph"
    spec: HallFusionSpec | None
    graph: DirectedGraph | None
    max_degree: int | None
    expected: Mapping

    def __post_init__(self):
        object.__setattr__(self, "expected", MappingProxyType(dict(self.expected)))


def gen_group_delta(elements, table) -> HallFusionSpec:
    """Group-delta tensors: d = 1, P[a,b,u] = [u = ab], inversion involution.

    ``table`` maps (a, b) to the product element; the group laws (closure,
    identity, inverses, associativity) are checked, not trusted.
    """
    elements = tuple(elements)
    eset = set(elements)
    if len(eset) != len(elements):
        raise GroupError("duplicate element names")
    for a in elements:
        for b in elements:
            if (a, b) not in table:
                raise GroupError(f"table has no entry for ({a!r}, {b!r})")
            if table[(a, b)] not in eset:
                raise GroupError(f"table is not closed at ({a!r}, {b!r})")
    identity = None
    for e in elements:
        if all(table[(e, a)] == a and table[(a, e)] == a for a in elements):
            identity = e
            break
    if identity is None:
        raise GroupError("table has no identity element")
    inverse = {}
    for a in elements:
        for b in elements:
            if table[(a, b)] == identity and table[(b, a)] == identity:
                inverse[a] = b
                break
        else:
            raise GroupError(f"element {a!r} has no inverse")
    for a in elements:
        for b in elements:
            for c in elements:
                if table[(table[(a, b)], c)] != table[(a, table[(b, c)])]:
                    raise GroupError(
                        f"table is not associative at ({a!r},{b!r},{c!r})")
    cat = DimCategory(elements, {a: 1 for a in elements})
    delta = {(a, b, table[(a, b)]): 1 for a in elements for b in elements}
    p = PromonoidalDimData(cat, delta, identity)
    q = PromonoidalDimData(cat, dict(delta), identity)
    return HallFusionSpec(cat, p, q, AntipodeMap(inverse))


def gen_endo_group(m: int) -> HallFusionSpec:
    """One object with endomorphism dimension m and P = Q = m."""
    if m < 1:
        raise RangeError("m must be >= 1")
    cat = DimCategory(("*",), {"*": m})
    p = PromonoidalDimData(cat, {("*", "*", "*"): m}, "*")
    q = PromonoidalDimData(cat, {("*", "*", "*"): m}, "*")
    return HallFusionSpec(cat, p, q, AntipodeMap({"*": "*"}))


def gen_fusion_ring(objects, table, unit, duality=None) -> HallFusionSpec:
    """Fusion-rule tensors: d = 1 throughout, P = Q = N.

    Unlike the raw builder this generator enforces the unit row/column
    pattern (E_UNIT); associativity is left to the auditor so that
    deliberately non-associative tables can be used for negative tests.
    """
    objects = tuple(objects)
    cat = DimCategory(objects, {a: 1 for a in objects})
    data = PromonoidalDimData(cat, table, unit)  # also checks indices/ranges
    for b in objects:
        for u in objects:
            if data.value(unit, b, u) != (1 if b == u else 0):
                raise UnitError(f"unit row violates the pattern at ({b},{u})")
            if data.value(b, unit, u) != (1 if b == u else 0):
                raise UnitError(f"unit column violates the pattern at ({b},{u})")
    sigma = AntipodeMap(duality) if duality is not None else None
    q = PromonoidalDimData(cat, dict(data.table), unit)
    return HallFusionSpec(cat, data, q, sigma)


def cyclic_table(n: int):
    """Element names and table of the cyclic group of order n."""
    names = tuple(str(i) for i in range(n))
    table = {(str(a), str(b)): str((a + b) % n)
             for a in range(n) for b in range(n)}
    return names, table


def fibonacci_table():
    objects = ("I", "x")
    table = {("I", "I", "I"): 1, ("I", "x", "x"): 1, ("x", "I", "x"): 1,
             ("x", "x", "I"): 1, ("x", "x", "x"): 1}
    return objects, table


def ising_table():
    objects = ("1", "eps", "sigma")
    table = {("1", "1", "1"): 1, ("1", "eps", "eps"): 1,
             ("1", "sigma", "sigma"): 1,
             ("eps", "1", "eps"): 1, ("sigma", "1", "sigma"): 1,
             ("eps", "eps", "1"): 1, ("eps", "sigma", "sigma"): 1,
             ("sigma", "eps", "sigma"): 1,
             ("sigma", "sigma", "1"): 1, ("sigma", "sigma", "eps"): 1}
    return objects, table


def _expect_vertex(fails=()):
    out = {k: "pass" for k in VERTEX_AXIOMS + VERTEX_CONDS}
    for k in fails:
        out[k] = "fail"
    return out


def _expect_face(fails=()):
    out = {k: "pass" for k in FACE_AXIOMS}
    for k in fails:
        out[k] = "fail"
    return out


_GROUP_DELTA_FAILS = ("delta_mult", "eps_mult", "delta_unit", "von_neumann",
                      "C3", "C4", "C6")
_FUSION_FAILS = _GROUP_DELTA_FAILS


def _build_catalog():
    entries = {}

    def vertex(name, spec, fails=()):
        entries[name] = CatalogEntry(name, "vertex", spec, None, None,
                                     _expect_vertex(fails))

    def graph(name, g, max_degree, fails=()):
        entries[name] = CatalogEntry(name, "graph", None, g, max_degree,
                                     _expect_face(fails))

    vertex("trivial", gen_group_delta(*cyclic_table(1)))
    vertex("z2-delta", gen_group_delta(*cyclic_table(2)), _GROUP_DELTA_FAILS)
    vertex("z3-delta", gen_group_delta(*cyclic_table(3)), _GROUP_DELTA_FAILS)
    vertex("z2-endo", gen_endo_group(2))
    vertex("z3-endo", gen_endo_group(3))
    fib_objects, fib = fibonacci_table()
    vertex("fibonacci",
           gen_fusion_ring(fib_objects, fib, "I", {"I": "I", "x": "x"}),
           _FUSION_FAILS)
    ising_objects, ising = ising_table()
    vertex("ising",
           gen_fusion_ring(ising_objects, ising, "1",
                           {a: a for a in ising_objects}),
           _FUSION_FAILS)
    graph("graph-2v",
          DirectedGraph(("1", "2"), (("a", "1", "1"), ("b", "1", "2"))),
          3, ("delta_unit",))
    graph("graph-1loop",
          DirectedGraph(("1",), (("x", "1", "1"),)), 3)
    return entries


_CATALOG = None


def catalog_names():
    return ("trivial", "z2-delta", "z3-delta", "z2-endo", "z3-endo",
            "fibonacci", "ising", "graph-2v", "graph-1loop")


def catalog_get(name: str) -> CatalogEntry:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build_catalog()
    try:
        return _CATALOG[name]
    except KeyError:
        raise NameError_(f"unknown catalog entry {name!r}; "
                         f"known: {', '.join(catalog_names())}") from None


def audit_catalog_entry(entry: CatalogEntry, witness_cap: int = 5):
    """Run the full audit pipeline for an entry.

    Returns (presentation, audit report, contraction report or None).
    """
    if entry.kind == "vertex":
        return full_vertex_audit(entry.spec, witness_cap)
    pc = graph_to_procategory(entry.graph, entry.max_degree)
    alg, report = full_face_audit(pc, entry.max_degree, witness_cap)
    return alg, report, None

"""Graded face algebras over procategory dimension data.

0-cells index "faces"; 1-cells carry a source, a target, a positive degree
and an endomorphism dimension. Two composability-consistent tensors P and Q
(degree-additive, finite support per degree) determine a graded algebra on
same-degree pair symbols e(a;b) plus one vacuum pair e(i;j) per ordered pair
of 0-cells. Vacuum pairs compose by strict identity laws and sum to the unit;
the coproduct runs over same-degree middles. Products past the degree cap are
truncated to zero and the affected tuples are excluded from audits.

The directed-graph generator realizes the standard example: 1-cells are the
paths of length 1..L, all dimensions 1, and the tensors are the concatenation
deltas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from .audits import (AuditReport, Witness, _Scan, audit_algebra,
                     audit_bialgebra_compat, audit_coalgebra)
from .core import (AlgebraPresentation, BasisId, Element, TensorElement,
                   multiply)
from .errors import CellError, IndexError_, RangeError


@dataclass(frozen=True)
class OneCell:
    """A generator cell: name, endpoints, positive degree, positive dimension.

    Degree 0 is reserved for the vacuum identity cells that the algebra
    builder adjoins on its own, one per 0-cell.
    """

    name: str
    src: str
    dst: str
    deg: int
    dim: int = 1

    def __post_init__(self):
        if self.deg < 1:
            raise CellError(
                f"cell {self.name!r}: degree must be >= 1 (degree 0 is "
                "reserved for vacuum cells)")
        if self.dim < 1:
            raise RangeError(f"cell {self.name!r}: dim must be >= 1")


@dataclass(frozen=True)
class DirectedGraph:
    vertices: tuple
    edges: tuple  # (name, src, dst)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        names = [e[0] for e in self.edges]
        if len(set(names)) != len(names):
            raise CellError("duplicate edge names")
        declared = set(self.vertices)
        if len(declared) != len(self.vertices):
            raise CellError("duplicate vertex names")
        for name, src, dst in self.edges:
            if src not in declared or dst not in declared:
                raise IndexError_(f"edge {name!r} uses an undeclared vertex")


@dataclass(frozen=True)
class ProcategoryDimData:
    """0-cells, 1-cells and the two composition tensors.

    Every table entry (a,b,u) must satisfy dst(a)=src(b), src(u)=src(a),
    dst(u)=dst(b) and deg(u) = deg(a)+deg(b).
    """

    zero_cells: tuple
    cells: tuple
    p_table: Mapping
    q_table: Mapping

    def __post_init__(self):
        object.__setattr__(self, "zero_cells", tuple(self.zero_cells))
        object.__setattr__(self, "cells", tuple(self.cells))
        zset = set(self.zero_cells)
        if len(zset) != len(self.zero_cells):
            raise CellError("duplicate 0-cell names")
        byname = {}
        for c in self.cells:
            if c.name in byname or c.name in zset:
                raise CellError(f"cell name {c.name!r} collides")
            if c.src not in zset or c.dst not in zset:
                raise IndexError_(f"cell {c.name!r} uses an undeclared 0-cell")
            byname[c.name] = c
        object.__setattr__(self, "_byname", byname)

        def checked(table):
            out = {}
            for (a, b, u), v in table.items():
                for name in (a, b, u):
                    if name not in byname:
                        raise IndexError_(f"undeclared cell {name!r} in table")
                n = int(v)
                if n < 0:
                    raise RangeError(
                        f"entry [{a},{b},{u}] must be >= 0, got {n}")
                ca, cb, cu = byname[a], byname[b], byname[u]
                if ca.dst != cb.src or cu.src != ca.src or cu.dst != cb.dst:
                    raise CellError(
                        f"entry [{a},{b},{u}] is not composability-consistent")
                if cu.deg != ca.deg + cb.deg:
                    raise CellError(
                        f"entry [{a},{b},{u}] is not degree-additive")
                if n:
                    out[(a, b, u)] = n
            return MappingProxyType(out)

        object.__setattr__(self, "p_table", checked(self.p_table))
        object.__setattr__(self, "q_table", checked(self.q_table))

    # cell lookups treat 0-cell names as their vacuum identity cells

    def is_vacuum(self, name: str) -> bool:
        return name in set(self.zero_cells)

    def cell(self, name: str) -> OneCell:
        try:
            return self._byname[name]
        except KeyError:
            raise IndexError_(f"unknown cell {name!r}") from None

    def src(self, name: str) -> str:
        return name if self.is_vacuum(name) else self.cell(name).src

    def dst(self, name: str) -> str:
        return name if self.is_vacuum(name) else self.cell(name).dst

    def deg(self, name: str) -> int:
        return 0 if self.is_vacuum(name) else self.cell(name).deg

    def dim(self, name: str) -> int:
        return 1 if self.is_vacuum(name) else self.cell(name).dim

    def cells_of_degree(self, deg: int):
        if deg == 0:
            return list(self.zero_cells)
        return [c.name for c in self.cells if c.deg == deg]

    def max_degree(self) -> int:
        return max((c.deg for c in self.cells), default=0)


@dataclass(frozen=True)
class FaceIdempotents:
    """Row sums e'_i = sum_j e(i;j) and column sums e_j = sum_i e(i;j)."""

    row: Mapping
    col: Mapping

    def __post_init__(self):
        object.__setattr__(self, "row", MappingProxyType(dict(self.row)))
        object.__setattr__(self, "col", MappingProxyType(dict(self.col)))


def graph_to_procategory(g: DirectedGraph, max_degree: int) -> ProcategoryDimData:
    """Path cells of length 1..max_degree with concatenation-delta tensors.

    Path names are edge-name concatenations; a collision (e.g. edges "a" and
    "aa") would make symbols ambiguous and is rejected.
    """
    if max_degree < 1:
        raise RangeError("max degree must be >= 1")
    cells = [OneCell(name, src, dst, 1) for name, src, dst in g.edges]
    frontier = list(cells)
    for deg in range(2, max_degree + 1):
        grown = []
        for path in frontier:
            for name, src, dst in g.edges:
                if src == path.dst:
                    grown.append(OneCell(path.name + name, path.src, dst, deg))
        cells.extend(grown)
        frontier = grown
    names = [c.name for c in cells]
    if len(set(names)) != len(names) or set(names) & set(g.vertices):
        raise CellError("path names collide; rename edges or vertices")
    table = {}
    index = {c.name: c for c in cells}
    for a in cells:
        for b in cells:
            if a.dst == b.src and a.deg + b.deg <= max_degree:
                joined = a.name + b.name
                if joined in index:
                    table[(a.name, b.name, joined)] = 1
    return ProcategoryDimData(g.vertices, tuple(cells), table, dict(table))


def _vacuum_pairs(pc):
    return [BasisId(i, j) for i in pc.zero_cells for j in pc.zero_cells]


def build_face_algebra(pc: ProcategoryDimData, max_degree: int) -> AlgebraPresentation:
    """Graded presentation on same-degree pairs plus vacuum pairs.

    Products whose output degree would exceed ``max_degree`` are truncated to
    zero; the presentation records the cap so audits can exclude the affected
    tuples. Non-composable products are exactly zero.
    """
    if max_degree < 0:
        raise RangeError("max degree must be >= 0")
    basis = list(_vacuum_pairs(pc))
    for deg in range(1, max_degree + 1):
        layer = pc.cells_of_degree(deg)
        basis.extend(BasisId(a, b) for a in layer for b in layer)
    degree = {b: pc.deg(b.upper) for b in basis}

    mul = {}
    for x in basis:
        for y in basis:
            prod = _face_mul(pc, max_degree, x, y)
            if prod:
                mul[(x, y)] = prod
    comul = {}
    for b in basis:
        mids = pc.cells_of_degree(degree[b])
        comul[b] = TensorElement(2, {
            (BasisId(b.upper, u), BasisId(u, b.lower)): Fraction(1)
            for u in mids})
    counit = {b: Fraction(1) for b in basis if b.upper == b.lower}
    unit = Element({v: Fraction(1) for v in _vacuum_pairs(pc)})
    return AlgebraPresentation(tuple(basis), mul, comul, unit, counit,
                               degree=degree, degree_cap=max_degree)


def _face_mul(pc, cap, x, y):
    """Structure constants of e(x.upper;x.lower) * e(y.upper;y.lower)."""
    a, c = x.upper, x.lower
    b, d = y.upper, y.lower
    va, vb = pc.is_vacuum(a), pc.is_vacuum(b)
    if va and vb:
        if a == b and c == d:
            return Element.basis(x)
        return Element.zero()
    if va:  # strict left identity on matching sources
        if pc.src(b) == a and pc.src(d) == c:
            return Element.basis(y)
        return Element.zero()
    if vb:  # strict right identity on matching targets
        if pc.dst(a) == b and pc.dst(c) == d:
            return Element.basis(x)
        return Element.zero()
    if pc.dst(a) != pc.src(b) or pc.dst(c) != pc.src(d):
        return Element.zero()
    if pc.deg(a) + pc.deg(b) > cap:
        return Element.zero()  # truncated
    coeffs = {}
    for (pa, pb, u), pv in pc.p_table.items():
        if (pa, pb) != (a, b):
            continue
        for (qc, qd, v), qv in pc.q_table.items():
            if (qc, qd) != (c, d):
                continue
            key = BasisId(u, v)
            coeffs[key] = coeffs.get(key, Fraction(0)) + Fraction(
                pv * qv, pc.dim(u) * pc.dim(v))
    return Element(coeffs)


def face_idempotents(alg: AlgebraPresentation,
                     pc: ProcategoryDimData) -> FaceIdempotents:
    """The two vacuum-pair families as elements of ``alg``."""
    for v in _vacuum_pairs(pc):
        if not alg.has(v):
            raise CellError(f"presentation lacks vacuum pair {v}")
    row = {i: Element({BasisId(i, j): Fraction(1) for j in pc.zero_cells})
           for i in pc.zero_cells}
    col = {j: Element({BasisId(i, j): Fraction(1) for i in pc.zero_cells})
           for j in pc.zero_cells}
    return FaceIdempotents(row, col)


def face_skip(pc: ProcategoryDimData, cap: int):
    """Tuple filter for the counit sub-audit: composability degeneracy
    (adjacent endpoints that do not match) on top of the degree cap.

    The product of a non-composable tuple is exactly zero on both sides of
    every other law, but the counit of two diagonal symbols that fail to
    compose is 1*1 against a vanished product, so those tuples are excluded
    rather than reported as failures."""

    def skipfn(ids):
        if sum(pc.deg(b.upper) for b in ids) > cap:
            return "truncated"
        for left, right in zip(ids, ids[1:]):
            if (pc.dst(left.upper) != pc.src(right.upper)
                    or pc.dst(left.lower) != pc.src(right.lower)):
                return "non-composable"
        return None

    return skipfn


def audit_face(alg: AlgebraPresentation, pc: ProcategoryDimData,
               witness_cap: int = 5) -> AuditReport:
    """Core audits restricted to in-cap tuples, plus the face checks.

    Tuples cut by the degree cap are skipped everywhere (counted and
    listed); the counit sub-audit additionally skips composability-degenerate
    pairs (see face_skip). The extra checks cover vacuum orthogonality, the
    projection laws of both idempotent families, and the decomposition of
    the unit.
    """
    cap = alg.degree_cap if alg.degree_cap is not None else pc.max_degree()
    report = (audit_algebra(alg, witness_cap)
              .merged(audit_coalgebra(alg, witness_cap))
              .merged(audit_bialgebra_compat(alg, witness_cap,
                                             eps_skip=face_skip(pc, cap))))

    ids = face_idempotents(alg, pc)
    vac = _vacuum_pairs(pc)
    orth = _Scan("vacuum_orth", witness_cap)
    for x in vac:
        if orth.done:
            break
        for y in vac:
            if orth.done:
                break
            want = Element.basis(x) if x == y else Element.zero()
            orth.compare((x, y), multiply(
                Element.basis(x), Element.basis(y), alg), want)
    rows = _Scan("face_row_proj", witness_cap)
    for i in pc.zero_cells:
        if rows.done:
            break
        ei = ids.row[i]
        for k in pc.zero_cells:
            want = ei if i == k else Element.zero()
            rows.compare(("orth", i, k), multiply(ei, ids.row[k], alg), want)
        for x in alg.basis:
            if rows.done:
                break
            e = Element.basis(x)
            want = e if pc.src(x.upper) == i else Element.zero()
            rows.compare(("left", i, x), multiply(ei, e, alg), want)
            want = e if pc.dst(x.upper) == i else Element.zero()
            rows.compare(("right", i, x), multiply(e, ei, alg), want)
    cols = _Scan("face_col_proj", witness_cap)
    for j in pc.zero_cells:
        if cols.done:
            break
        ej = ids.col[j]
        for l in pc.zero_cells:
            want = ej if j == l else Element.zero()
            cols.compare(("orth", j, l), multiply(ej, ids.col[l], alg), want)
        for x in alg.basis:
            if cols.done:
                break
            e = Element.basis(x)
            want = e if pc.src(x.lower) == j else Element.zero()
            cols.compare(("left", j, x), multiply(ej, e, alg), want)
            want = e if pc.dst(x.lower) == j else Element.zero()
            cols.compare(("right", j, x), multiply(e, ej, alg), want)
    unit_sum = _Scan("face_unit_sum", witness_cap)
    total_row = Element()
    for e in ids.row.values():
        total_row = total_row + e
    total_col = Element()
    for e in ids.col.values():
        total_col = total_col + e
    unit_sum.compare(("row",), total_row, alg.unit)
    unit_sum.compare(("col",), total_col, alg.unit)
    face_checks = AuditReport((orth.finish(), rows.finish(),
                               cols.finish(), unit_sum.finish()))
    return report.merged(face_checks)


def replay_face_witness(w: Witness, alg: AlgebraPresentation,
                        pc: ProcategoryDimData):
    """Recompute both sides of a face-specific witness (see audit_face)."""
    ids = face_idempotents(alg, pc)
    if w.axiom == "vacuum_orth":
        x, y = w.inputs
        want = Element.basis(x) if x == y else Element.zero()
        return multiply(Element.basis(x), Element.basis(y), alg), want
    if w.axiom in ("face_row_proj", "face_col_proj"):
        fam = ids.row if w.axiom == "face_row_proj" else ids.col
        kind, i, x = w.inputs
        if kind == "orth":
            want = fam[i] if i == x else Element.zero()
            return multiply(fam[i], fam[x], alg), want
        e = Element.basis(x)
        comp = x.upper if w.axiom == "face_row_proj" else x.lower
        if kind == "left":
            want = e if pc.src(comp) == i else Element.zero()
            return multiply(fam[i], e, alg), want
        want = e if pc.dst(comp) == i else Element.zero()
        return multiply(e, fam[i], alg), want
    if w.axiom == "face_unit_sum":
        fam = ids.row if w.inputs == ("row",) else ids.col
        total = Element()
        for e in fam.values():
            total = total + e
        return total, alg.unit
    raise KeyError(f"no face replay rule for axiom {w.axiom!r}")


def full_face_audit(pc: ProcategoryDimData, max_degree: int,
                    witness_cap: int = 5):
    """Build the graded algebra and run the full face audit suite."""
    alg = build_face_algebra(pc, max_degree)
    return alg, audit_face(alg, pc, witness_cap)

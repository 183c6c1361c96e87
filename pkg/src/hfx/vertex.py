"""Pair-basis fusion algebras built from promonoidal dimension data.

A finite list of objects with endomorphism dimensions d(a), together with two
nonnegative-integer tensors P[a,b,u] and Q[c,d,v] (each with a unit object),
determines an algebra on the n^2 symbols e(a;b):

    e(a;c) * e(b;d) = sum_{u,v}  P[a,b,u] Q[c,d,v] / (d(u) d(v))  e(u;v)

with unit e(I;J), matrix-style coproduct De(a;b) = sum_u e(a;u) (x) e(u;b)
and counit e(a;b) -> delta_{a,b}. The checkers in this module compute the
"dimension shadows" of the structural conditions (unit pattern, associativity
of the weighted triple product, compatibility and counit contractions,
involution symmetry, von Neumann contractions) so they can be compared
against the direct audits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from .audits import (audit_algebra, audit_antipode,
                     audit_bialgebra_compat, audit_coalgebra)
from .core import (AlgebraPresentation, BasisId, Element, LinearEndo,
                   TensorElement, Scalar, format_scalar)
from .errors import IndexError_, MismatchError, RangeError, SigmaError

PASS = "pass"
FAIL = "fail"


@dataclass(frozen=True)
class DimCategory:
    """Finite ordered object list with positive endomorphism dimensions."""

    objects: tuple
    dims: Mapping

    def __post_init__(self):
        objects = tuple(self.objects)
        if len(set(objects)) != len(objects):
            raise IndexError_("duplicate object names")
        dims = {}
        for a in objects:
            if a not in self.dims:
                raise IndexError_(f"no dimension declared for object {a!r}")
            d = int(self.dims[a])
            if d < 1:
                raise RangeError(f"dim of {a!r} must be >= 1, got {d}")
            dims[a] = d
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "dims", MappingProxyType(dims))

    def dim(self, a: str) -> int:
        try:
            return self.dims[a]
        except KeyError:
            raise IndexError_(f"unknown object {a!r}") from None

    def check(self, a: str) -> str:
        if a not in self.dims:
            raise IndexError_(f"unknown object {a!r}")
        return a


@dataclass(frozen=True)
class PromonoidalDimData:
    """Sparse tensor of pairing dimensions P[a,b,u] plus a unit object."""

    base: DimCategory
    table: Mapping
    unit: str

    def __post_init__(self):
        self.base.check(self.unit)
        table = {}
        for (a, b, u), v in self.table.items():
            self.base.check(a)
            self.base.check(b)
            self.base.check(u)
            n = int(v)
            if n < 0:
                raise RangeError(f"entry [{a},{b},{u}] must be >= 0, got {n}")
            if n:
                table[(a, b, u)] = n
        object.__setattr__(self, "table", MappingProxyType(table))

    def value(self, a: str, b: str, u: str) -> int:
        return self.table.get((a, b, u), 0)

    def rows(self, a: str, b: str):
        """Nonzero (u, value) pairs of the (a,b) fiber, in object order."""
        out = []
        for u in self.base.objects:
            v = self.table.get((a, b, u), 0)
            if v:
                out.append((u, v))
        return out


@dataclass(frozen=True)
class AntipodeMap:
    """Object-level involution"""

    mapping: Mapping

    def __post_init__(self):
        object.__setattr__(self, "mapping", MappingProxyType(dict(self.mapping)))

    def of(self, a: str) -> str:
        try:
            return self.mapping[a]
        except KeyError:
            raise SigmaError(f"involution not defined on object {a!r}") from None


@dataclass(frozen=True)
class HallFusionSpec:
    """A category with two pairing tensors (upper-slot and lower-slot data).

    Construction only requires the two tensors to share the base category;
    all further conditions are audited, not assumed, so deliberately invalid
    data can be explored.
    """

    category: DimCategory
    p_data: PromonoidalDimData
    q_data: PromonoidalDimData
    sigma: AntipodeMap | None = None

    def __post_init__(self):
        if self.p_data.base != self.category or self.q_data.base != self.category:
            raise MismatchError("pairing tensors must share the base category")


def validate_sigma(spec: HallFusionSpec) -> AntipodeMap:
    """Check involution, dimension preservation and unit exchange (E_SIGMA)."""
    if spec.sigma is None:
        raise SigmaError("no involution declared")
    cat = spec.category
    sg = spec.sigma
    for a in cat.objects:
        sa = sg.of(a)
        cat.check(sa)
        if sg.of(sa) != a:
            raise SigmaError(f"map is not an involution at {a!r}")
        if cat.dim(sa) != cat.dim(a):
            raise SigmaError(f"dimension not preserved at {a!r}")
    if spec.p_data.unit != sg.of(spec.q_data.unit):
        raise SigmaError("the two units are not exchanged by the involution")
    return sg


# -- contraction reports -------------------------------------------------------


@dataclass(frozen=True)
class ContractionValue:
    index: tuple
    lhs: Scalar
    rhs: Scalar


@dataclass(frozen=True)
class ContractionCheck:
    cond: str
    title: str
    status: str
    values: tuple
    warnings: tuple = ()
    alt_status: str | None = None
    alt_values: tuple = ()
    note: str = ""

    def failing(self):
        return [v for v in self.values if v.lhs != v.rhs]


@dataclass(frozen=True)
class ContractionReport:
    checks: tuple

    def __getitem__(self, cond: str) -> ContractionCheck:
        for c in self.checks:
            if c.cond == cond:
                return c
        raise KeyError(cond)

    def __contains__(self, cond: str) -> bool:
        return any(c.cond == cond for c in self.checks)

    def conds(self):
        return [c.cond for c in self.checks]

    def statuses(self) -> dict:
        return {c.cond: c.status for c in self.checks}

    def failures(self) -> list:
        return [c.cond for c in self.checks if c.status == FAIL]

    def all_pass(self) -> bool:
        return not self.failures()

    def merged(self, other: "ContractionReport") -> "ContractionReport":
        return ContractionReport(self.checks + other.checks)


def _mk_check(cond, title, values, warnings=(), note="",
              alt_values=(), with_alt=False):
    status = FAIL if any(v.lhs != v.rhs for v in values) else PASS
    alt_status = None
    if with_alt:
        alt_status = FAIL if any(v.lhs != v.rhs for v in alt_values) else PASS
    return ContractionCheck(cond, title, status, tuple(values),
                            tuple(warnings), alt_status, tuple(alt_values),
                            note)


def triple_product_dim(data: PromonoidalDimData, a: str, b: str, c: str,
                       e: str) -> Scalar:
    """Weighted dimension of the left-bracketed triple pairing at output e:
    sum_u P[a,b,u] P[u,c,e] / d(u)."""
    cat = data.base
    for name in (a, b, c, e):
        cat.check(name)
    total = Fraction(0)
    for u, v in data.rows(a, b):
        w = data.value(u, c, e)
        if w:
            total += Fraction(v * w, cat.dim(u))
    return total


def triple_product_dim_right(data: PromonoidalDimData, a: str, b: str, c: str,
                             e: str) -> Scalar:
    """Right-bracketed variant: sum_w P[b,c,w] P[a,w,e] / d(w)."""
    cat = data.base
    for name in (a, b, c, e):
        cat.check(name)
    total = Fraction(0)
    for w, v in data.rows(b, c):
        x = data.value(a, w, e)
        if x:
            total += Fraction(v * x, cat.dim(w))
    return total


def validate_promonoidal(data: PromonoidalDimData, tag: str = "") -> ContractionReport:
    """Unit-pattern (C1) and associativity-shadow (C2) checks for one tensor.

    C1: P[I,b,u] = delta_{b,u} d(b) and P[a,I,u] = delta_{a,u} d(a).
    C2: both bracketings of the weighted triple product agree everywhere.
    Non-integral weighted sums are flagged as warnings, never as failures.
    """
    cat = data.base
    unit = data.unit
    c1_rows = []
    for b in cat.objects:
        for u in cat.objects:
            want = Fraction(cat.dim(b)) if b == u else Fraction(0)
            c1_rows.append(ContractionValue(
                ("left", b, u), Fraction(data.value(unit, b, u)), want))
    for a in cat.objects:
        for u in cat.objects:
            want = Fraction(cat.dim(a)) if a == u else Fraction(0)
            c1_rows.append(ContractionValue(
                ("right", a, u), Fraction(data.value(a, unit, u)), want))
    c2_rows = []
    warnings = []
    for a in cat.objects:
        for b in cat.objects:
            for c in cat.objects:
                for e in cat.objects:
                    lhs = triple_product_dim(data, a, b, c, e)
                    rhs = triple_product_dim_right(data, a, b, c, e)
                    c2_rows.append(ContractionValue((a, b, c, e), lhs, rhs))
                    for side, val in (("left", lhs), ("right", rhs)):
                        if val.denominator != 1:
                            warnings.append(
                                f"C2{tag} {side} value at ({a},{b},{c};{e}) = "
                                f"{format_scalar(val)} is non-integral")
    return ContractionReport((
        _mk_check("C1" + tag, "unit shadow", c1_rows),
        _mk_check("C2" + tag, "associativity shadow (triple product, both "
                              "bracketings)", c2_rows, warnings=warnings),
    ))


def tensor_promonoidal(pd: PromonoidalDimData,
                       qd: PromonoidalDimData) -> PromonoidalDimData:
    """Componentwise tensor of two pairing structures over the same base;
    the result lives on the pair category with d(a,c) = d(a) d(c)."""
    if pd.base != qd.base:
        raise MismatchError("tensor factors must share the base category")
    cat = pd.base

    def pair(a, c):
        return f"({a},{c})"

    objects = [pair(a, c) for a in cat.objects for c in cat.objects]
    dims = {pair(a, c): cat.dim(a) * cat.dim(c)
            for a in cat.objects for c in cat.objects}
    base = DimCategory(tuple(objects), dims)
    table = {}
    for (a, b, u), v in pd.table.items():
        for (c, d, w), v2 in qd.table.items():
            table[(pair(a, c), pair(b, d), pair(u, w))] = v * v2
    return PromonoidalDimData(base, table, pair(pd.unit, qd.unit))


def build_hall_fusion(spec: HallFusionSpec) -> AlgebraPresentation:
    """Construct the pair-basis presentation from the two tensors.

    Building never validates the structural conditions, so the auditor can
    demonstrate exactly which laws a non-promonoidal input breaks.
    """
    cat = spec.category
    p, q = spec.p_data, spec.q_data
    objects = cat.objects
    basis = tuple(BasisId(a, b) for a in objects for b in objects)
    mul = {}
    for a in objects:
        for c in objects:
            x = BasisId(a, c)
            for b in objects:
                prow = p.rows(a, b)
                if not prow:
                    continue
                for d in objects:
                    qrow = q.rows(c, d)
                    if not qrow:
                        continue
                    coeffs = {}
                    for u, pv in prow:
                        for v, qv in qrow:
                            coeffs[BasisId(u, v)] = Fraction(
                                pv * qv, cat.dim(u) * cat.dim(v))
                    mul[(x, BasisId(b, d))] = Element(coeffs)
    comul = {
        b: TensorElement(2, {
            (BasisId(b.upper, u), BasisId(u, b.lower)): Fraction(1)
            for u in objects})
        for b in basis}
    counit = {b: Fraction(1) for b in basis if b.upper == b.lower}
    unit = Element.basis(BasisId(p.unit, q.unit))
    return AlgebraPresentation(basis, mul, comul, unit, counit)


def check_compat_contraction(spec: HallFusionSpec) -> ContractionReport:
    """C3: T[u,v] = sum_{a,b} P[a,b,u] Q[a,b,v] against delta_{u,v} d(u) d(v).

    That normalization is the one equivalent to multiplicativity of the
    coproduct (given the unit pattern); the literal coend-dimension reading
    delta_{u,v} d(u) is reported alongside and differs whenever d > 1.
    """
    cat = spec.category
    rows, alt = [], []
    for u in cat.objects:
        for v in cat.objects:
            t = Fraction(0)
            for a in cat.objects:
                for b in cat.objects:
                    t += spec.p_data.value(a, b, u) * spec.q_data.value(a, b, v)
            rows.append(ContractionValue(
                (u, v), t,
                Fraction(cat.dim(u) * cat.dim(v)) if u == v else Fraction(0)))
            alt.append(ContractionValue(
                (u, v), t, Fraction(cat.dim(u)) if u == v else Fraction(0)))
    return ContractionReport((_mk_check(
        "C3", "compatibility contraction", rows, alt_values=alt, with_alt=True,
        note="alt uses the literal coend-dimension normalization "
             "delta(u,v)*d(u)"),))


def check_counit_contraction(spec: HallFusionSpec) -> ContractionReport:
    """C4: sum_u P[a,b,u] Q[c,d,u] / d(u)^2  against  delta_{a,c} delta_{b,d}.

    By expanding the definitions this is coefficient-for-coefficient the
    counit-multiplicativity audit, so the two must always agree.
    """
    cat = spec.category
    rows = []
    for a in cat.objects:
        for b in cat.objects:
            for c in cat.objects:
                for d in cat.objects:
                    val = Fraction(0)
                    for u, pv in spec.p_data.rows(a, b):
                        qv = spec.q_data.value(c, d, u)
                        if qv:
                            val += Fraction(pv * qv, cat.dim(u) ** 2)
                    want = Fraction(1) if (a == c and b == d) else Fraction(0)
                    rows.append(ContractionValue((a, b, c, d), val, want))
    return ContractionReport((_mk_check("C4", "counit contraction", rows),))


def build_antipode(spec: HallFusionSpec) -> LinearEndo:
    """The basis map e(a;b) -> e(sb;sa) for a valid involution (E_SIGMA)."""
    sg = validate_sigma(spec)
    objects = spec.category.objects
    images = {
        BasisId(a, b): Element.basis(BasisId(sg.of(b), sg.of(a)))
        for a in objects for b in objects}
    return LinearEndo(images)


def check_antipode_contraction(spec: HallFusionSpec) -> ContractionReport:
    """C5: P[a,b,u] = Q[sb,sa,su] for all triples (reported, not enforced)."""
    sg = validate_sigma(spec)
    cat = spec.category
    rows = []
    for a in cat.objects:
        for b in cat.objects:
            for u in cat.objects:
                rows.append(ContractionValue(
                    (a, b, u),
                    Fraction(spec.p_data.value(a, b, u)),
                    Fraction(spec.q_data.value(sg.of(b), sg.of(a), sg.of(u)))))
    return ContractionReport((_mk_check(
        "C5", "involution symmetry of the two tensors", rows),))


def check_vn_contractions(spec: HallFusionSpec) -> ContractionReport:
    """C6: the two weighted contractions that factor the von Neumann map:

        sum_v p3(a, sv, v; x) = delta_{a,x} d(a)   (upper slots)
        sum_u q3(u, su, b; y) = delta_{b,y} d(b)   (lower slots)

    where p3/q3 are the left-bracketed weighted triple products.
    """
    sg = validate_sigma(spec)
    cat = spec.category
    rows = []
    warnings = []
    for a in cat.objects:
        for x in cat.objects:
            val = Fraction(0)
            for v in cat.objects:
                val += triple_product_dim(spec.p_data, a, sg.of(v), v, x)
            want = Fraction(cat.dim(a)) if a == x else Fraction(0)
            rows.append(ContractionValue(("upper", a, x), val, want))
            if val.denominator != 1:
                warnings.append(f"C6 upper value at ({a};{x}) = "
                                f"{format_scalar(val)} is non-integral")
    for b in cat.objects:
        for y in cat.objects:
            val = Fraction(0)
            for u in cat.objects:
                val += triple_product_dim(spec.q_data, u, sg.of(u), b, y)
            want = Fraction(cat.dim(b)) if b == y else Fraction(0)
            rows.append(ContractionValue(("lower", b, y), val, want))
            if val.denominator != 1:
                warnings.append(f"C6 lower value at ({b};{y}) = "
                                f"{format_scalar(val)} is non-integral")
    return ContractionReport((_mk_check(
        "C6", "von Neumann contractions", rows, warnings=warnings),))


def full_vertex_audit(spec: HallFusionSpec, witness_cap: int = 5):
    """Build the algebra and run every audit and contraction check.

    Returns (presentation, audit report, contraction report). The antipode
    block is included only when an involution is declared; an invalid
    involution raises E_SIGMA.
    """
    alg = build_hall_fusion(spec)
    audit = (audit_algebra(alg, witness_cap)
             .merged(audit_coalgebra(alg, witness_cap))
             .merged(audit_bialgebra_compat(alg, witness_cap)))
    contractions = (validate_promonoidal(spec.p_data, ".p")
                    .merged(validate_promonoidal(spec.q_data, ".q"))
                    .merged(check_compat_contraction(spec))
                    .merged(check_counit_contraction(spec)))
    if spec.sigma is not None:
        s = build_antipode(spec)
        audit = audit.merged(audit_antipode(alg, s, witness_cap))
        contractions = (contractions
                        .merged(check_antipode_contraction(spec))
                        .merged(check_vn_contractions(spec)))
    return alg, audit, contractions


def swapped(spec: HallFusionSpec) -> HallFusionSpec:
    """The spec with the two tensors (and their units) exchanged."""
    return HallFusionSpec(spec.category, spec.q_data, spec.p_data, None)

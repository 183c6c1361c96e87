"""Brute-force axiom audits with re-evaluatable counterexample witnesses.

Each audit scans every relevant basis tuple, records up to ``witness_cap``
failing tuples (then stops scanning that axiom), and reports pass/fail/skip.
A witness stores the inputs together with both computed sides, so a report
can be checked later by replaying the inputs through the public operations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (AlgebraPresentation, Element, LinearEndo, TensorElement,
                   comul_left, comul_right, comultiply, counit_of,
                   counit_slot, delta3, endo_slot, mu3, multiply,
                   multiply_tensor, tensor, _comultiply, _multiply)

PASS = "pass"
FAIL = "fail"
SKIP = "skip"

DEFAULT_WITNESS_CAP = 5

ALGEBRA_AXIOMS = ("assoc", "unit_left", "unit_right")
COALGEBRA_AXIOMS = ("coassoc", "counit_left", "counit_right")
BIALGEBRA_AXIOMS = ("delta_mult", "eps_mult", "delta_unit", "delta_unit_weak")
ANTIPODE_AXIOMS = ("antipode_antihom", "antipode_unit",
                   "antipode_involution", "von_neumann")


@dataclass(frozen=True)
class Witness:
    """A failing tuple with the two unequal sides as computed."""

    axiom: str
    inputs: tuple
    lhs: object
    rhs: object


@dataclass(frozen=True)
class AxiomCheck:
    axiom: str
    status: str
    witnesses: tuple = ()
    checked: int = 0
    skipped: int = 0
    skipped_tuples: tuple = ()
    note: str = ""


@dataclass(frozen=True)
class AuditReport:
    """Ordered collection of axiom checks."""

    checks: tuple

    def __getitem__(self, axiom: str) -> AxiomCheck:
        for c in self.checks:
            if c.axiom == axiom:
                return c
        raise KeyError(axiom)

    def __contains__(self, axiom: str) -> bool:
        return any(c.axiom == axiom for c in self.checks)

    def axioms(self):
        return [c.axiom for c in self.checks]

    def statuses(self) -> dict:
        return {c.axiom: c.status for c in self.checks}

    def failures(self) -> list:
        return [c.axiom for c in self.checks if c.status == FAIL]

    def all_pass(self) -> bool:
        return not self.failures()

    def merged(self, other: "AuditReport") -> "AuditReport":
        return AuditReport(self.checks + other.checks)

    def restrict(self, axioms) -> "AuditReport":
        keep = set(axioms)
        return AuditReport(tuple(c for c in self.checks if c.axiom in keep))


class _Scan:
    """Collects failures for one axiom; stops scanning once the cap is hit."""

    def __init__(self, axiom, cap):
        self.axiom = axiom
        self.cap = cap
        self.witnesses = []
        self.checked = 0
        self.skipped = 0
        self.skipped_tuples = []
        self.done = cap == 0

    def skip(self, inputs):
        self.skipped += 1
        if len(self.skipped_tuples) < max(self.cap, 1) * 4:
            self.skipped_tuples.append(tuple(inputs))

    def compare(self, inputs, lhs, rhs):
        if self.done:
            return
        self.checked += 1
        if lhs != rhs:
            self.witnesses.append(Witness(self.axiom, tuple(inputs), lhs, rhs))
            if len(self.witnesses) >= self.cap:
                self.done = True

    def finish(self, note="") -> AxiomCheck:
        status = FAIL if self.witnesses else PASS
        return AxiomCheck(self.axiom, status, tuple(self.witnesses),
                          self.checked, self.skipped,
                          tuple(self.skipped_tuples), note)


def _default_skip(alg):
    def skipfn(ids):
        if alg.truncated(*ids):
            return "truncated"
        return None
    return skipfn


def audit_algebra(alg: AlgebraPresentation,
                  witness_cap: int = DEFAULT_WITNESS_CAP,
                  skip=None) -> AuditReport:
    """Associativity over all basis triples; unit laws over the basis.

    ``skip`` maps a basis tuple to a skip reason (or None); by default tuples
    cut by the degree cap are skipped.
    """
    skipfn = skip or _default_skip(alg)
    assoc = _Scan("assoc", witness_cap)
    for x in alg.basis:
        if assoc.done:
            break
        for y in alg.basis:
            if assoc.done:
                break
            xy = alg.mul_basis(x, y)
            for z in alg.basis:
                if assoc.done:
                    break
                if skipfn((x, y, z)):
                    assoc.skip((x, y, z))
                    continue
                lhs = _multiply(xy, Element.basis(z), alg)
                rhs = _multiply(Element.basis(x),
                                alg.mul_basis(y, z), alg)
                assoc.compare((x, y, z), lhs, rhs)
    left = _Scan("unit_left", witness_cap)
    right = _Scan("unit_right", witness_cap)
    for x in alg.basis:
        e = Element.basis(x)
        if not left.done:
            left.compare((x,), _multiply(alg.unit, e, alg), e)
        if not right.done:
            right.compare((x,), _multiply(e, alg.unit, alg), e)
    return AuditReport((assoc.finish(), left.finish(), right.finish()))


def audit_coalgebra(alg: AlgebraPresentation,
                    witness_cap: int = DEFAULT_WITNESS_CAP) -> AuditReport:
    """Coassociativity and both counit laws over the basis."""
    coassoc = _Scan("coassoc", witness_cap)
    cleft = _Scan("counit_left", witness_cap)
    cright = _Scan("counit_right", witness_cap)
    for x in alg.basis:
        e = Element.basis(x)
        d = alg.comul_basis(x)
        if not coassoc.done:
            coassoc.compare((x,), comul_left(d, alg), comul_right(d, alg))
        if not cleft.done:
            cleft.compare((x,), counit_slot(d, alg, 0), e)
        if not cright.done:
            cright.compare((x,), counit_slot(d, alg, 1), e)
    return AuditReport((coassoc.finish(), cleft.finish(), cright.finish()))


def _weak_coherence_sides(alg):
    one = alg.unit
    d1 = _comultiply(one, alg)
    a = comul_left(d1, alg)
    d1_left = TensorElement(3, {
        (k1, k2, k3): c * c3
        for (k1, k2), c in d1.coeffs.items() for k3, c3 in one.coeffs.items()})
    d1_right = TensorElement(3, {
        (k1, k2, k3): c1 * c
        for k1, c1 in one.coeffs.items() for (k2, k3), c in d1.coeffs.items()})
    b = multiply_tensor(d1_left, d1_right, alg)
    c = multiply_tensor(d1_right, d1_left, alg)
    return a, b, c


def audit_bialgebra_compat(alg: AlgebraPresentation,
                           witness_cap: int = DEFAULT_WITNESS_CAP,
                           skip=None, eps_skip=None) -> AuditReport:
    """Multiplicativity of the coproduct and counit, plus the unit laws
    for the coproduct (strict and weak coherence reported separately).

    ``eps_skip`` lets callers restrict the counit sub-audit further than the
    others (graded face audits exclude composability-degenerate pairs there).
    """
    skipfn = skip or _default_skip(alg)
    eps_skipfn = eps_skip or skipfn
    dmult = _Scan("delta_mult", witness_cap)
    emult = _Scan("eps_mult", witness_cap)
    for x in alg.basis:
        if dmult.done and emult.done:
            break
        dx = alg.comul_basis(x)
        ex = alg.counit_basis(x)
        for y in alg.basis:
            if dmult.done and emult.done:
                break
            reason = skipfn((x, y))
            eps_reason = reason or eps_skipfn((x, y))
            if reason and eps_reason:
                dmult.skip((x, y))
                emult.skip((x, y))
                continue
            xy = alg.mul_basis(x, y)
            if not dmult.done:
                if reason:
                    dmult.skip((x, y))
                else:
                    lhs = _comultiply(xy, alg)
                    rhs = multiply_tensor(dx, alg.comul_basis(y), alg)
                    dmult.compare((x, y), lhs, rhs)
            if not emult.done:
                if eps_reason:
                    emult.skip((x, y))
                else:
                    emult.compare((x, y), counit_of(xy, alg),
                                  ex * alg.counit_basis(y))
    dunit = _Scan("delta_unit", witness_cap)
    dunit.compare((), _comultiply(alg.unit, alg), tensor(alg.unit, alg.unit))
    weak = _Scan("delta_unit_weak", witness_cap)
    a, b, c = _weak_coherence_sides(alg)
    weak.compare(("ab",), a, b)
    weak.compare(("ac",), a, c)
    return AuditReport((dmult.finish(), emult.finish(),
                        dunit.finish(), weak.finish()))


def audit_antipode(alg: AlgebraPresentation, s: LinearEndo,
                   witness_cap: int = DEFAULT_WITNESS_CAP,
                   skip=None) -> AuditReport:
    """Anti-homomorphism, unit, involution and von Neumann laws for ``s``.

    The von Neumann scan needs unambiguous three-fold (co)products, so it is
    skipped unless the algebra and coalgebra audits pass.
    """
    skipfn = skip or _default_skip(alg)
    for b in alg.basis:
        s.of_basis(b)  # totality; raises E_BASIS when undefined
    anti = _Scan("antipode_antihom", witness_cap)
    for x in alg.basis:
        if anti.done:
            break
        sx = s.of_basis(x)
        for y in alg.basis:
            if anti.done:
                break
            if skipfn((x, y)):
                anti.skip((x, y))
                continue
            lhs = s(alg.mul_basis(x, y))
            rhs = _multiply(s.of_basis(y), sx, alg)
            anti.compare((x, y), lhs, rhs)
    sunit = _Scan("antipode_unit", witness_cap)
    sunit.compare((), s(alg.unit), alg.unit)
    invol = _Scan("antipode_involution", witness_cap)
    for x in alg.basis:
        if invol.done:
            break
        invol.compare((x,), s(s.of_basis(x)), Element.basis(x))
    gate_ok = (audit_algebra(alg, witness_cap=1, skip=skip).all_pass()
               and audit_coalgebra(alg, witness_cap=1).all_pass())
    if not gate_ok:
        vn_check = AxiomCheck(
            "von_neumann", SKIP,
            note="algebra or coalgebra laws fail; fixed three-fold "
                 "parenthesizations are not meaningful")
    else:
        vn = _Scan("von_neumann", witness_cap)
        for x in alg.basis:
            if vn.done:
                break
            if skipfn((x, x, x)):
                vn.skip((x,))
                continue
            lhs = mu3(endo_slot(delta3(Element.basis(x), alg), s, 1), alg)
            vn.compare((x,), lhs, Element.basis(x))
        vn_check = vn.finish()
    return AuditReport((anti.finish(), sunit.finish(),
                        invol.finish(), vn_check))


def replay_witness(w: Witness, alg: AlgebraPresentation,
                   s: LinearEndo | None = None):
    """Recompute both sides of a witness through the public operations.

    Returns (lhs, rhs); a sound witness reproduces the recorded values and
    they remain unequal.
    """
    ax = w.axiom
    if ax == "assoc":
        x, y, z = (Element.basis(b) for b in w.inputs)
        return (multiply(multiply(x, y, alg), z, alg),
                multiply(x, multiply(y, z, alg), alg))
    if ax == "unit_left":
        e = Element.basis(w.inputs[0])
        return multiply(alg.unit, e, alg), e
    if ax == "unit_right":
        e = Element.basis(w.inputs[0])
        return multiply(e, alg.unit, alg), e
    if ax == "coassoc":
        d = comultiply(Element.basis(w.inputs[0]), alg)
        return comul_left(d, alg), comul_right(d, alg)
    if ax == "counit_left":
        e = Element.basis(w.inputs[0])
        return counit_slot(comultiply(e, alg), alg, 0), e
    if ax == "counit_right":
        e = Element.basis(w.inputs[0])
        return counit_slot(comultiply(e, alg), alg, 1), e
    if ax == "delta_mult":
        x, y = (Element.basis(b) for b in w.inputs)
        return (comultiply(multiply(x, y, alg), alg),
                multiply_tensor(comultiply(x, alg), comultiply(y, alg), alg))
    if ax == "eps_mult":
        x, y = (Element.basis(b) for b in w.inputs)
        return (counit_of(multiply(x, y, alg), alg),
                counit_of(x, alg) * counit_of(y, alg))
    if ax == "delta_unit":
        return comultiply(alg.unit, alg), tensor(alg.unit, alg.unit)
    if ax == "delta_unit_weak":
        a, b, c = _weak_coherence_sides(alg)
        return (a, b) if w.inputs == ("ab",) else (a, c)
    if ax == "antipode_antihom":
        x, y = (Element.basis(b) for b in w.inputs)
        return (s(multiply(x, y, alg)),
                multiply(s(Element.basis(w.inputs[1])),
                         s(Element.basis(w.inputs[0])), alg))
    if ax == "antipode_unit":
        return s(alg.unit), alg.unit
    if ax == "antipode_involution":
        x = w.inputs[0]
        return s(s.of_basis(x)), Element.basis(x)
    if ax == "von_neumann":
        x = Element.basis(w.inputs[0])
        return mu3(endo_slot(delta3(x, alg), s, 1), alg), x
    raise KeyError(f"no replay rule for axiom {ax!r}")

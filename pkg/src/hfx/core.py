"""Sparse structure-constant (co)algebra engine over exact rationals.

Everything is a linear combination of pair symbols e(a;b) with Fraction
coefficients; products, coproducts and counits are table-driven and extended
(bi)linearly. No floating point is used anywhere, so audits can compare
values with ``==``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, NamedTuple

from .errors import BasisError, CellError

Scalar = Fraction


class BasisId(NamedTuple):
    """A basis symbol e(upper;lower); components are interned cell names."""

    upper: str
    lower: str

    def __str__(self):
        return f"e({self.upper};{self.lower})"

    def transpose(self):
        return BasisId(self.lower, self.upper)


def bid(upper: str, lower: str) -> BasisId:
    return BasisId(upper, lower)


def _normalize(coeffs) -> dict:
    out = {}
    for k, v in coeffs.items():
        q = v if isinstance(v, Fraction) else Fraction(v)
        if q:
            out[k] = q
    return out


class Element:
    """Sparse rational linear combination of BasisIds.

    Zero coefficients are never stored; two elements are equal iff their
    coefficient maps are identical.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping | None = None):
        self.coeffs = _normalize(coeffs or {})

    @classmethod
    def zero(cls) -> "Element":
        return cls()

    @classmethod
    def basis(cls, b: BasisId) -> "Element":
        return cls({b: Fraction(1)})

    def items(self):
        return sorted(self.coeffs.items())

    def __getitem__(self, b):
        return self.coeffs.get(b, Fraction(0))

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Element) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return Element(out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) - v
        return Element(out)

    def __neg__(self):
        return Element({k: -v for k, v in self.coeffs.items()})

    def __rmul__(self, scalar):
        q = Fraction(scalar)
        return Element({k: q * v for k, v in self.coeffs.items()})

    __mul__ = __rmul__

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(
            (f"{v}*{k}" if v != 1 else str(k)) for k, v in self.items())


class TensorElement:
    """Sparse tensor of arity 2 or 3, keyed by tuples of BasisIds."""

    __slots__ = ("arity", "coeffs")

    def __init__(self, arity: int, coeffs: Mapping | None = None):
        self.arity = arity
        self.coeffs = _normalize(coeffs or {})
        for k in self.coeffs:
            if len(k) != arity:
                raise ValueError(f"key {k} has arity {len(k)}, expected {arity}")

    @classmethod
    def zero(cls, arity: int) -> "TensorElement":
        return cls(arity)

    def items(self):
        return sorted(self.coeffs.items())

    def __getitem__(self, key):
        return self.coeffs.get(key, Fraction(0))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, TensorElement)
                and self.arity == other.arity and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.arity, frozenset(self.coeffs.items())))

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return TensorElement(self.arity, out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) - v
        return TensorElement(self.arity, out)

    def __rmul__(self, scalar):
        q = Fraction(scalar)
        return TensorElement(self.arity, {k: q * v for k, v in self.coeffs.items()})

    __mul__ = __rmul__

    def __repr__(self):
        if not self.coeffs:
            return f"0[x{self.arity}]"
        return " + ".join(
            ("" if v == 1 else f"{v}*") + "(x)".join(str(b) for b in k)
            for k, v in self.items())


def tensor(x: Element, y: Element) -> TensorElement:
    out = {}
    for kx, cx in x.coeffs.items():
        for ky, cy in y.coeffs.items():
            out[(kx, ky)] = cx * cy
    return TensorElement(2, out)


def tensor3(x: Element, y: Element, z: Element) -> TensorElement:
    out = {}
    for kx, cx in x.coeffs.items():
        for ky, cy in y.coeffs.items():
            for kz, cz in z.coeffs.items():
                out[(kx, ky, kz)] = cx * cy * cz
    return TensorElement(3, out)


@dataclass(frozen=True)
class AlgebraPresentation:
    """A finite-dimensional (co)algebra given by structure-constant tables.

    ``mul`` maps a pair of basis ids to the product Element (missing pairs
    multiply to zero), ``comul`` maps a basis id to an arity-2 TensorElement,
    ``counit`` stores the nonzero counit values. When ``degree`` is present,
    products must add degrees and the coproduct must preserve them; tuples
    whose total degree exceeds ``degree_cap`` are the truncation-affected
    ones (their products were cut to zero by the degree cap).

    Tables are wrapped read-only at construction; audits never mutate.
    """

    basis: tuple
    mul: Mapping
    comul: Mapping
    unit: Element
    counit: Mapping
    degree: Mapping | None = None
    degree_cap: int | None = None

    def __post_init__(self):
        index = {b: i for i, b in enumerate(self.basis)}
        if len(index) != len(self.basis):
            raise CellError("duplicate basis ids")
        object.__setattr__(self, "basis", tuple(self.basis))
        object.__setattr__(self, "_index", index)

        def known(b):
            if b not in index:
                raise BasisError(f"{b} is not in the basis")

        mul = {}
        for (x, y), elem in self.mul.items():
            known(x)
            known(y)
            for z in elem.coeffs:
                known(z)
            if elem:
                mul[(x, y)] = elem
        comul = {}
        for x, t in self.comul.items():
            known(x)
            for key in t.coeffs:
                for z in key:
                    known(z)
            comul[x] = t
        for z in self.unit.coeffs:
            known(z)
        counit = {}
        for x, v in self.counit.items():
            known(x)
            q = Fraction(v)
            if q:
                counit[x] = q
        if self.degree is not None:
            deg = {}
            for b in self.basis:
                if b not in self.degree:
                    raise CellError(f"no degree assigned to {b}")
                deg[b] = int(self.degree[b])
            for (x, y), elem in mul.items():
                for z in elem.coeffs:
                    if deg[z] != deg[x] + deg[y]:
                        raise CellError(
                            f"product {x}*{y} -> {z} violates degree additivity")
            for x, t in comul.items():
                for key in t.coeffs:
                    if any(deg[z] != deg[x] for z in key):
                        raise CellError(f"coproduct of {x} does not preserve degree")
            object.__setattr__(self, "degree", MappingProxyType(deg))
        object.__setattr__(self, "mul", MappingProxyType(mul))
        object.__setattr__(self, "comul", MappingProxyType(comul))
        object.__setattr__(self, "counit", MappingProxyType(counit))

    # -- basis-level accessors ------------------------------------------------

    def index(self, b: BasisId) -> int:
        try:
            return self._index[b]
        except KeyError:
            raise BasisError(f"{b} is not in the basis") from None

    def has(self, b) -> bool:
        return b in self._index

    def mul_basis(self, x: BasisId, y: BasisId) -> Element:
        return self.mul.get((x, y), _ZERO)

    def comul_basis(self, x: BasisId) -> TensorElement:
        return self.comul.get(x, _ZERO2)

    def counit_basis(self, x: BasisId) -> Scalar:
        return self.counit.get(x, Fraction(0))

    def truncated(self, *ids: BasisId) -> bool:
        """True when a product of these basis elements was cut by the cap."""
        if self.degree is None or self.degree_cap is None:
            return False
        return sum(self.degree[b] for b in ids) > self.degree_cap


_ZERO = Element()
_ZERO2 = TensorElement(2)


@dataclass(frozen=True)
class LinearEndo:
    """A linear map defined by its images on basis symbols."""

    images: Mapping

    def __post_init__(self):
        object.__setattr__(self, "images", MappingProxyType(dict(self.images)))

    def of_basis(self, b: BasisId) -> Element:
        try:
            return self.images[b]
        except KeyError:
            raise BasisError(f"map not defined on {b}") from None

    def __call__(self, x: Element) -> Element:
        out = {}
        for k, c in x.coeffs.items():
            for z, cz in self.of_basis(k).coeffs.items():
                out[z] = out.get(z, Fraction(0)) + c * cz
        return Element(out)


# -- linear operations --------------------------------------------------------

def _check_element(x: Element, alg: AlgebraPresentation):
    for k in x.coeffs:
        if not alg.has(k):
            raise BasisError(f"{k} is not in the basis")


def multiply(x: Element, y: Element, alg: AlgebraPresentation) -> Element:
    """Bilinear extension of the multiplication table."""
    _check_element(x, alg)
    _check_element(y, alg)
    return _multiply(x, y, alg)


def _multiply(x, y, alg):
    out = {}
    for kx, cx in x.coeffs.items():
        for ky, cy in y.coeffs.items():
            prod = alg.mul.get((kx, ky))
            if prod is None:
                continue
            c = cx * cy
            for kz, cz in prod.coeffs.items():
                out[kz] = out.get(kz, Fraction(0)) + c * cz
    return Element(out)


def comultiply(x: Element, alg: AlgebraPresentation) -> TensorElement:
    """Linear extension of the comultiplication table."""
    _check_element(x, alg)
    return _comultiply(x, alg)


def _comultiply(x, alg):
    out = {}
    for k, c in x.coeffs.items():
        for key, cc in alg.comul_basis(k).coeffs.items():
            out[key] = out.get(key, Fraction(0)) + c * cc
    return TensorElement(2, out)


def counit_of(x: Element, alg: AlgebraPresentation) -> Scalar:
    """Sum of coefficient * counit over the support of x."""
    _check_element(x, alg)
    total = Fraction(0)
    for k, c in x.coeffs.items():
        total += c * alg.counit_basis(k)
    return total


def multiply_tensor(s: TensorElement, t: TensorElement,
                    alg: AlgebraPresentation) -> TensorElement:
    """Slotwise product of two tensors of equal arity."""
    if s.arity != t.arity:
        raise ValueError("tensor arities differ")
    out = {}
    for ks, cs in s.coeffs.items():
        for kt, ct in t.coeffs.items():
            parts = [alg.mul.get((a, b)) for a, b in zip(ks, kt)]
            if any(p is None for p in parts):
                continue
            c0 = cs * ct
            if s.arity == 2:
                for z1, c1 in parts[0].coeffs.items():
                    for z2, c2 in parts[1].coeffs.items():
                        k = (z1, z2)
                        out[k] = out.get(k, Fraction(0)) + c0 * c1 * c2
            else:
                for z1, c1 in parts[0].coeffs.items():
                    for z2, c2 in parts[1].coeffs.items():
                        for z3, c3 in parts[2].coeffs.items():
                            k = (z1, z2, z3)
                            out[k] = out.get(k, Fraction(0)) + c0 * c1 * c2 * c3
    return TensorElement(s.arity, out)


def comul_left(t: TensorElement, alg) -> TensorElement:
    """Apply the coproduct to the first slot of an arity-2 tensor."""
    out = {}
    for (k1, k2), c in t.coeffs.items():
        for (a, b), cc in alg.comul_basis(k1).coeffs.items():
            key = (a, b, k2)
            out[key] = out.get(key, Fraction(0)) + c * cc
    return TensorElement(3, out)


def comul_right(t: TensorElement, alg) -> TensorElement:
    """Apply the coproduct to the second slot of an arity-2 tensor."""
    out = {}
    for (k1, k2), c in t.coeffs.items():
        for (a, b), cc in alg.comul_basis(k2).coeffs.items():
            key = (k1, a, b)
            out[key] = out.get(key, Fraction(0)) + c * cc
    return TensorElement(3, out)


def delta3(x: Element, alg) -> TensorElement:
    """Three-fold coproduct in the fixed left parenthesization."""
    return comul_left(_comultiply(x, alg), alg)


def mu3(t: TensorElement, alg) -> Element:
    """Three-fold product in the fixed left parenthesization."""
    out = {}
    for (k1, k2, k3), c in t.coeffs.items():
        first = alg.mul.get((k1, k2))
        if first is None:
            continue
        for z, cz in first.coeffs.items():
            nxt = alg.mul.get((z, k3))
            if nxt is None:
                continue
            c0 = c * cz
            for w, cw in nxt.coeffs.items():
                out[w] = out.get(w, Fraction(0)) + c0 * cw
    return Element(out)


def counit_slot(t: TensorElement, alg, slot: int) -> Element:
    """Contract one slot of an arity-2 tensor with the counit."""
    out = {}
    for (k1, k2), c in t.coeffs.items():
        if slot == 0:
            keep, eaten = k2, k1
        else:
            keep, eaten = k1, k2
        val = c * alg.counit_basis(eaten)
        if val:
            out[keep] = out.get(keep, Fraction(0)) + val
    return Element(out)


def endo_slot(t: TensorElement, s: LinearEndo, slot: int) -> TensorElement:
    """Apply a linear map to one slot of a tensor."""
    out = {}
    for key, c in t.coeffs.items():
        for z, cz in s.of_basis(key[slot]).coeffs.items():
            new = key[:slot] + (z,) + key[slot + 1:]
            out[new] = out.get(new, Fraction(0)) + c * cz
    return TensorElement(t.arity, out)


def format_scalar(q: Scalar) -> str:
    """Render a rational as "num/den" ("num" when the denominator is 1)."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"

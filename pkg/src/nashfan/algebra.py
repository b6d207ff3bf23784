"""Semigroup polynomials over Q, matrix monomial orderings, initial forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import Vec, contains, cross, vadd, vdot
from .semigroup import AffineSemigroup, is_member


class ContextMismatch(ValueError):
    """Operands live over different semigroups."""


class ZeroPolynomial(ValueError):
    """The zero polynomial has no leading monomial."""


class WeightOutsideSigma(ValueError):
    """Weight vector does not lie in the support cone."""


class Poly:
    """Finite map from semigroup monomials to nonzero exact rationals."""

    __slots__ = ("sg", "terms")

    def __init__(self, sg: AffineSemigroup, terms=None):
        clean = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            if not is_member(sg, e):
                raise ValueError(f"exponent {e} is not a semigroup member")
            clean[e] = c
        self.sg = sg
        self.terms = clean

    @classmethod
    def _make(cls, sg, terms):
        # internal constructor: exponents already known to be members
        p = object.__new__(cls)
        p.sg = sg
        p.terms = {e: c for e, c in terms.items() if c != 0}
        return p

    @classmethod
    def zero(cls, sg) -> "Poly":
        return cls._make(sg, {})

    @classmethod
    def monomial(cls, sg, exp: Vec, coeff=1) -> "Poly":
        return cls(sg, {exp: Fraction(coeff)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> set:
        return set(self.terms)

    def coeff(self, exp: Vec) -> Fraction:
        return self.terms.get(exp, Fraction(0))

    def _check(self, other):
        if self.sg != other.sg:
            raise ContextMismatch("polynomials over different semigroups")

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.sg == other.sg and self.terms == other.terms

    def __hash__(self):
        return hash((self.sg, frozenset(self.terms.items())))

    def __neg__(self):
        return Poly._make(self.sg, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.monomial(self.sg, (0, 0), other) if other else Poly.zero(self.sg)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Poly._make(self.sg, out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-Fraction(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Poly._make(self.sg, {e: c * v for e, v in self.terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = vadd(e1, e2)
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Poly._make(self.sg, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.monomial(self.sg, (0, 0))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def shift(self, exp: Vec) -> "Poly":
        """Multiply by the monomial x^exp."""
        return Poly._make(self.sg, {vadd(e, exp): c for e, c in self.terms.items()})

    def to_json(self) -> dict:
        items = sorted(self.terms.items())
        return {
            "terms": [
                {"exp": list(e), "num": c.numerator, "den": c.denominator}
                for e, c in items
            ]
        }

    @classmethod
    def from_json(cls, sg, data: dict) -> "Poly":
        return cls(sg, {
            tuple(t["exp"]): Fraction(t["num"], t["den"]) for t in data["terms"]
        })

    def __repr__(self):
        return f"Poly({dict(sorted(self.terms.items()))})"


@dataclass(frozen=True)
class MatrixOrdering:
    """Monomial ordering by successive integer weight rows."""

    rows: tuple
    sg: AffineSemigroup

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("ordering needs at least one row")
        if not any(
            cross(rows[i], rows[j])
            for i in range(len(rows)) for j in range(i + 1, len(rows))
        ):
            raise ValueError("rows do not span R^2; distinct monomials could compare equal")
        for g in self.sg.generators:
            for r in rows:
                d = vdot(r, g)
                if d > 0:
                    break
                if d < 0:
                    raise ValueError(f"row {r} orders generator {g} below the unit")
            else:
                raise ValueError(f"all rows vanish on generator {g}")

    def key(self, a: Vec) -> tuple:
        return tuple(vdot(r, a) for r in self.rows)

    def compare(self, a: Vec, b: Vec) -> int:
        """-1, 0 or 1 as a is below, equal to or above b."""
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


def weight_refine(ord: MatrixOrdering, w: Vec) -> MatrixOrdering:
    """Prepend w as the dominant row; requires w in the support cone."""
    if not contains(ord.sg.support_cone, w):
        raise WeightOutsideSigma(f"{w} is outside the support cone")
    return MatrixOrdering((tuple(w),) + ord.rows, ord.sg)


def leading_monomial(ord: MatrixOrdering, f: Poly) -> Vec:
    if f.sg != ord.sg:
        raise ContextMismatch("polynomial and ordering over different semigroups")
    if f.is_zero:
        raise ZeroPolynomial("zero polynomial has no leading monomial")
    return max(f.terms, key=ord.key)


def initial_form(w: Vec, f: Poly) -> Poly:
    """Sum of the terms of f with maximal w-weight; in_w(0) = 0."""
    if not contains(f.sg.support_cone, w):
        raise WeightOutsideSigma(f"{w} is outside the support cone")
    if f.is_zero:
        return f
    m = max(vdot(w, e) for e in f.terms)
    return Poly._make(f.sg, {e: c for e, c in f.terms.items() if vdot(w, e) == m})

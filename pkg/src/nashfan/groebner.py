"""Division, Buchberger completion and reduced Groebner bases in S."""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass

from .algebra import MatrixOrdering, Poly, leading_monomial
from .lattice import vsub
from .semigroup import AffineSemigroup, divides, min_common_multiples


class QuotientNotFinite(ValueError):
    """Standard monomial enumeration exceeded its cap without closing."""


class PairQueueExhausted(RuntimeError):
    """Defensive cap on S-pair reductions hit; indicates an engine bug."""


@dataclass(frozen=True)
class Ideal:
    generators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("ideal needs at least one generator")
        sg = gens[0].sg
        for g in gens:
            if g.is_zero:
                raise ValueError("ideal generators must be nonzero")
            if g.sg != sg:
                raise ValueError("ideal generators over different semigroups")

    @property
    def sg(self) -> AffineSemigroup:
        return self.generators[0].sg


@dataclass(frozen=True)
class MarkedBasis:
    """Reduced Groebner basis with marked leading monomials.

    Elements are stored sorted lexicographically by mark so that equal
    bases compare equal regardless of the ordering that produced them.
    """

    elements: tuple           # of (Poly, mark) pairs
    ordering: MatrixOrdering

    def __post_init__(self):
        elems = tuple(sorted(self.elements, key=lambda gm: gm[1]))
        object.__setattr__(self, "elements", elems)
        sg = self.ordering.sg
        marks = [m for _, m in elems]
        if len(set(marks)) != len(marks):
            raise ValueError("marks must be pairwise distinct")
        for g, m in elems:
            if leading_monomial(self.ordering, g) != m or g.coeff(m) != 1:
                raise ValueError(f"element marked {m} is not monic with that leading monomial")
            for e in g.support():
                for m2 in marks:
                    if m2 != m and divides(sg, m2, e):
                        raise ValueError(f"monomial {e} of element {m} is divisible by mark {m2}")

    @property
    def sg(self) -> AffineSemigroup:
        return self.ordering.sg

    def marks(self) -> set:
        return {m for _, m in self.elements}

    def to_json(self) -> dict:
        return {
            "ordering": [list(r) for r in self.ordering.rows],
            "elements": [
                {"poly": g.to_json(), "mark": list(m)} for g, m in self.elements
            ],
        }

    @classmethod
    def from_json(cls, ordering: MatrixOrdering, data: dict) -> "MarkedBasis":
        elems = tuple(
            (Poly.from_json(ordering.sg, e["poly"]), tuple(e["mark"]))
            for e in data["elements"]
        )
        return cls(elems, ordering)


def _reduce(f: Poly, pairs, ord: MatrixOrdering) -> Poly:
    """Full division remainder of f by a list of monic (poly, mark) pairs.

    Tie-breaks: reduce the largest reducible monomial of the remainder,
    using the divisor with the smallest mark.  Every monomial introduced
    by a reduction step sits strictly below the reduced one, so a single
    descending heap pass visits each monomial once.
    """
    sg = ord.sg
    terms = dict(f.terms)
    out = {}
    heap = [(tuple(-x for x in ord.key(e)), e) for e in terms]
    heapq.heapify(heap)
    pending = set(terms)
    while heap:
        _, e = heapq.heappop(heap)
        pending.discard(e)
        c = terms.get(e)
        if not c:
            continue
        divisors = [(g, m) for g, m in pairs if divides(sg, m, e)]
        if not divisors:
            out[e] = c
            del terms[e]
            continue
        g, m = min(divisors, key=lambda gm: ord.key(gm[1]))
        shift = vsub(e, m)
        for e2, c2 in g.terms.items():
            e3 = (e2[0] + shift[0], e2[1] + shift[1])
            nc = terms.get(e3, 0) - c * c2
            if nc:
                terms[e3] = nc
                if e3 not in pending:
                    pending.add(e3)
                    heapq.heappush(heap, (tuple(-x for x in ord.key(e3)), e3))
            else:
                terms.pop(e3, None)
    return Poly._make(ord.sg, out)


def normal_form(f: Poly, basis: MarkedBasis) -> Poly:
    """Remainder of f on full division by the basis; support avoids all marks."""
    return _reduce(f, basis.elements, basis.ordering)


def s_polynomials(p1, p2, sg: AffineSemigroup) -> list:
    """One S-polynomial per minimal common multiple of the two marks."""
    (g1, m1), (g2, m2) = p1, p2
    return [
        g1.shift(vsub(m, m1)) - g2.shift(vsub(m, m2))
        for m in sorted(min_common_multiples(sg, m1, m2))
    ]


def buchberger(ideal: Ideal, ord: MatrixOrdering, max_reductions: int = 10 ** 6) -> MarkedBasis:
    """The unique reduced Groebner basis of the ideal under the ordering."""
    sg = ord.sg
    basis = []
    heap = []
    tiebreak = itertools.count()

    def push_pairs(j):
        for i in range(j):
            for m in min_common_multiples(sg, basis[i][1], basis[j][1]):
                heapq.heappush(heap, (ord.key(m), next(tiebreak), i, j, m))

    # reduce-on-insert keeps the working basis small from the start
    for g in sorted(ideal.generators, key=lambda g: ord.key(leading_monomial(ord, g))):
        r = _reduce(g, basis, ord)
        if not r.is_zero:
            mr = leading_monomial(ord, r)
            basis.append((r * (1 / r.coeff(mr)), mr))
            push_pairs(len(basis) - 1)

    reductions = 0
    while heap:
        _, _, i, j, m = heapq.heappop(heap)
        reductions += 1
        if reductions > max_reductions:
            raise PairQueueExhausted(f"more than {max_reductions} S-pair reductions")
        (gi, mi), (gj, mj) = basis[i], basis[j]
        spoly = gi.shift(vsub(m, mi)) - gj.shift(vsub(m, mj))
        r = _reduce(spoly, basis, ord)
        if not r.is_zero:
            mr = leading_monomial(ord, r)
            basis.append((r * (1 / r.coeff(mr)), mr))
            push_pairs(len(basis) - 1)

    # minimalize: drop elements whose mark is divisible by another kept mark
    basis.sort(key=lambda gm: ord.key(gm[1]))
    kept = []
    for g, m in basis:
        if not any(divides(sg, m2, m) for _, m2 in kept):
            kept.append((g, m))

    # inter-reduce tails to a fixpoint
    changed = True
    while changed:
        changed = False
        for idx, (g, m) in enumerate(kept):
            others = kept[:idx] + kept[idx + 1:]
            tail = _reduce(g - Poly.monomial(sg, m), others, ord)
            reduced = Poly.monomial(sg, m) + tail
            if reduced != g:
                kept[idx] = (reduced, m)
                changed = True

    return MarkedBasis(tuple(kept), ord)


def standard_monomials(basis: MarkedBasis, cap: int = 10 ** 5) -> set:
    """Semigroup members outside the initial ideal of the basis.

    The standard set is closed under divisors, so a search from the unit
    monomial along generator additions visits all of it.
    """
    sg = basis.sg
    marks = basis.marks()

    def standard(e):
        return not any(divides(sg, m, e) for m in marks)

    if not standard((0, 0)):
        return set()
    seen = {(0, 0)}
    queue = [(0, 0)]
    while queue:
        e = queue.pop()
        for g in sg.generators:
            e2 = (e[0] + g[0], e[1] + g[1])
            if e2 not in seen and standard(e2):
                seen.add(e2)
                queue.append(e2)
                if len(seen) > cap:
                    raise QuotientNotFinite(f"more than {cap} standard monomials")
    return seen


def ideal_membership(f: Poly, basis: MarkedBasis) -> bool:
    return normal_form(f, basis).is_zero


def colon_contains(basisI: MarkedBasis, f: Poly, h: Poly) -> bool:
    """True iff h lies in the colon ideal (I : f)."""
    if f.is_zero:
        raise ValueError("colon by the zero polynomial")
    return ideal_membership(h * f, basisI)

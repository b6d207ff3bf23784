"""The A3 application layer: J_n, the P_n/D_n families, the Laurent
specialization, Nash-blowup fans, and the verification report."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import ContextMismatch, MatrixOrdering, Poly
from .fan import cone_of_basis, fan_of_cones, groebner_fan
from .groebner import Ideal, buchberger, ideal_membership, standard_monomials
from .lattice import Cone2, Vec, dual_cone, hilbert_basis, multiplicity, vadd, vdot, vsub
from .semigroup import AffineSemigroup, divides


class DualNotNonnegative(ValueError):
    """The dual cone leaves the first quadrant; pick better coordinates."""


# ---------------------------------------------------------------------------
# the A3 context

def a3_semigroup() -> AffineSemigroup:
    """sigma = cone((0,1),(4,-3)); the ring C[u, u^3v^4, uv]."""
    return AffineSemigroup.from_support_cone(Cone2((0, 1), (4, -3)))


def a3_ordering(sg: AffineSemigroup | None = None) -> MatrixOrdering:
    return MatrixOrdering(((2, -1), (1, 1)), sg if sg is not None else a3_semigroup())


def jn_generators(sg: AffineSemigroup, n: int) -> Ideal:
    """All degree-(n+1) products of the binomials x^a - 1 over the generators."""
    if n < 1:
        raise ValueError("n must be positive")
    binomials = [Poly.monomial(sg, a) - 1 for a in sg.generators]
    gens = tuple(
        _product(sg, combo)
        for combo in itertools.combinations_with_replacement(binomials, n + 1)
    )
    return Ideal(gens)


def _product(sg, polys):
    out = Poly.monomial(sg, (0, 0))
    for p in polys:
        out = out * p
    return out


# ---------------------------------------------------------------------------
# the combinatorial families

@dataclass(frozen=True)
class PnFamily:
    """Predicted mark set of the reduced basis of J_n, split into strands."""

    n: int
    p: Vec
    q: tuple
    r: tuple
    s: Vec

    def __post_init__(self):
        pts = self.points()
        if len(pts) != self.n + 3:
            raise ValueError(f"family for n={self.n} has {len(pts)} points, expected {self.n + 3}")
        sg = a3_semigroup()
        for a in pts:
            for b in pts:
                if a != b and divides(sg, a, b):
                    raise ValueError(f"family point {a} divides {b}")

    def points(self) -> set:
        return {self.p, *self.q, *self.r, self.s}


def pn_family(n: int) -> PnFamily:
    if n < 1:
        raise ValueError("n must be positive")
    if n % 2 == 1:
        p = ((n + 3) // 2, 0)
        q0 = vadd(((n + 3) // 2, 1), vscale2((n - 1) // 2, (1, 2)))
        q = tuple(vsub(q0, vscale2(i, (1, 2))) for i in range((n - 1) // 2 + 1))
        r0 = vadd(q0, (0, 1))
        r = tuple(vadd(r0, vscale2(j, (1, 2))) for j in range((n - 1) // 2 + 1))
        s = vscale2((n + 1) // 2, (3, 4))
    else:
        p = ((n + 2) // 2, 0)
        q0 = vadd(((n + 2) // 2, 0), vscale2(n // 2, (1, 2)))
        q = tuple(vsub(q0, vscale2(i, (1, 2))) for i in range((n - 2) // 2 + 1))
        r0 = vadd(q0, (0, 1))
        r = tuple(vadd(r0, vscale2(j, (1, 2))) for j in range(n // 2 + 1))
        s = vscale2((n + 2) // 2, (3, 4))
    return PnFamily(n, p, q, r, s)


def vscale2(k: int, a: Vec) -> Vec:
    return (k * a[0], k * a[1])


def dn_set(n: int) -> set:
    """Standard monomials of J_n, built by the disjoint-union recursion."""
    if n < 1:
        raise ValueError("n must be positive")
    d = {(0, 0), (1, 0), (1, 1)}
    for k in range(2, n + 1):
        d |= pn_family(k - 1).points() - pn_family(k).points()
    return d


def theta(a: Vec) -> Vec:
    return vadd(a, (1, 1))


def phi_linear(a: Vec) -> int:
    return a[1] - a[0]


def l_vector(n: int) -> Vec:
    """Primitive generator of the second ray of the cone of GB(J_n)."""
    if n % 2 == 1:
        return (2 * n - 2, -n + 2)
    return (2 * n, -n + 1)


def psi(n: int, a: Vec) -> int:
    if n < 2:
        raise ValueError("psi is defined for n >= 2")
    return vdot(l_vector(n), a)


# ---------------------------------------------------------------------------
# the Laurent specialization u -> 1/lambda, v -> lambda

class Laurent:
    """Laurent polynomial in one variable over Q, as exponent -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {e: Fraction(c) for e, c in (terms or {}).items() if c != 0}

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Laurent(out)

    def __sub__(self, other):
        return self + Laurent({e: -c for e, c in other.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Laurent({e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, Fraction(0)) + c1 * c2
        return Laurent(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "Laurent":
        return Laurent({e + k: c for e, c in self.terms.items()})

    def __repr__(self):
        return f"Laurent({dict(sorted(self.terms.items()))})"


def lambda_minus_one_power(k: int) -> Laurent:
    out = Laurent({0: 1})
    for _ in range(k):
        out = out * Laurent({1: 1, 0: -1})
    return out


def phi_specialize(f: Poly) -> Laurent:
    """Image of f under u^x v^y -> lambda^(y - x)."""
    if f.sg != a3_semigroup():
        raise ContextMismatch("phi is defined on the A3 semigroup ring only")
    out = {}
    for e, c in f.terms.items():
        k = phi_linear(e)
        out[k] = out.get(k, Fraction(0)) + c
    return Laurent(out)


def divisible_by_lambda_minus_one(f: Laurent, k: int) -> bool:
    """k-fold synthetic division by (lambda - 1) with zero remainders."""
    if f.is_zero:
        return True
    lo = min(f.terms)
    hi = max(f.terms)
    coeffs = [f.terms.get(e, Fraction(0)) for e in range(lo, hi + 1)]
    for _ in range(k):
        # divide sum c_i x^i by (x - 1): remainder is the value at 1
        rem = Fraction(0)
        quot = []
        for c in reversed(coeffs):
            rem = rem + c
            quot.append(rem)
        if rem != 0:
            return False
        coeffs = list(reversed(quot[:-1]))
        if not coeffs:
            return True
    return True


def _solve_exact(columns, target):
    """Whether target is a rational combination of the column vectors."""
    rows = len(target)
    aug = [[col[i] for col in columns] + [target[i]] for i in range(rows)]
    ncols = len(columns)
    pivot_row = 0
    for col in range(ncols):
        pivot = next((r for r in range(pivot_row, rows) if aug[r][col] != 0), None)
        if pivot is None:
            continue
        aug[pivot_row], aug[pivot] = aug[pivot], aug[pivot_row]
        pv = aug[pivot_row][col]
        aug[pivot_row] = [x / pv for x in aug[pivot_row]]
        for r in range(rows):
            if r != pivot_row and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[pivot_row])]
        pivot_row += 1
        if pivot_row == rows:
            break
    # consistent iff no row reads 0 = nonzero
    return not any(
        all(x == 0 for x in row[:-1]) and row[-1] != 0 for row in aug
    )


def phi_ideal_is_power(n: int) -> bool:
    """Two-sided check that phi(J_n) equals the (n+1)-st power of (lambda-1).

    One side: every specialized generator is divisible by (lambda-1)^(n+1).
    Other side: (lambda-1)^(n+1) is a rational combination of shifted
    specialized generators with shifts in [-(n+1), n+1].
    """
    sg = a3_semigroup()
    images = [phi_specialize(g) for g in jn_generators(sg, n).generators]
    if not all(divisible_by_lambda_minus_one(f, n + 1) for f in images):
        return False
    target = lambda_minus_one_power(n + 1)
    shifted = [
        f.shift(k)
        for f in images if not f.is_zero
        for k in range(-(n + 1), n + 2)
    ]
    exps = set(target.terms)
    for f in shifted:
        exps |= set(f.terms)
    exps = sorted(exps)
    columns = [[f.terms.get(e, Fraction(0)) for e in exps] for f in shifted]
    tvec = [target.terms.get(e, Fraction(0)) for e in exps]
    return _solve_exact(columns, tvec)


# ---------------------------------------------------------------------------
# verification report

@dataclass(frozen=True)
class ClaimResult:
    n: int
    claim_id: str
    statement: str
    passed: bool
    witness: str


@dataclass(frozen=True)
class VerificationReport:
    n_max: int
    claims: tuple

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def to_json(self) -> dict:
        return {
            "n_max": self.n_max,
            "all_passed": self.all_passed,
            "claims": [
                {
                    "n": c.n,
                    "claim_id": c.claim_id,
                    "statement": c.statement,
                    "pass": c.passed,
                    "witness": c.witness,
                }
                for c in self.claims
            ],
        }


def verify_paper(n_max: int) -> VerificationReport:
    """Recompute every checkable per-n fact about GB(J_n) up to n_max."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    sg = a3_semigroup()
    ordering = a3_ordering(sg)
    uv_minus_1 = Poly.monomial(sg, (1, 1)) - 1
    claims = []
    prev_basis = None
    for n in range(1, n_max + 1):
        basis = buchberger(jn_generators(sg, n), ordering)
        fam = pn_family(n)
        by_mark = {m: g for g, m in basis.elements}

        marks_ok = basis.marks() == fam.points()
        claims.append(ClaimResult(
            n, "a", "marks of the reduced basis equal the predicted family",
            marks_ok, "" if marks_ok else f"marks={sorted(basis.marks())}",
        ))

        std = standard_monomials(basis)
        dn = dn_set(n)
        std_ok = std == dn and len(dn) == (n + 1) * (n + 2) // 2
        claims.append(ClaimResult(
            n, "b", "standard monomials equal D_n of size (n+1)(n+2)/2",
            std_ok, "" if std_ok else f"standard={sorted(std)}",
        ))

        gc = cone_of_basis(basis, sg.support_cone)
        expected_cone = Cone2((2, -1), l_vector(n))
        cone_ok = gc.cone == expected_cone
        claims.append(ClaimResult(
            n, "c", "cone of the basis has rays (2,-1) and the parity ray",
            cone_ok, "" if cone_ok else f"cone={gc.cone}",
        ))

        mult_ok = multiplicity(gc.cone) == 2
        claims.append(ClaimResult(
            n, "d", "cone multiplicity is 2 (an A1 singularity)",
            mult_ok, "" if mult_ok else f"multiplicity={multiplicity(gc.cone)}",
        ))

        if n >= 2:
            prev_fam = pn_family(n - 1)
            if n % 2 == 1:
                mark, needed = fam.q[(n - 1) // 2], prev_fam.r[(n - 1) // 2]
            else:
                mark, needed = fam.p, prev_fam.s
            g = by_mark.get(mark)
            supp_ok = g is not None and needed in g.support()
            claims.append(ClaimResult(
                n, "e", "the second-ray witness monomial appears in the expected element",
                supp_ok, "" if supp_ok else f"element marked {mark} misses {needed}",
            ))

            colon_ok = all(
                ideal_membership(uv_minus_1 * g, basis)
                for g, _ in prev_basis.elements
            )
            claims.append(ClaimResult(
                n, "f", "(uv-1) times every previous basis element lies in J_n",
                colon_ok, "",
            ))

        if n % 2 == 0:
            dropped = pn_family(n - 1).points() - fam.points() if n >= 2 else set()
            bad = [
                m for g, m in basis.elements
                if m in dropped and not phi_specialize(g).is_zero
            ]
            claims.append(ClaimResult(
                n, "g", "phi annihilates basis elements marked in the dropped strand",
                not bad, "" if not bad else f"phi nonzero at marks {bad}",
            ))

        prev_basis = basis
    return VerificationReport(n_max, tuple(claims))


# ---------------------------------------------------------------------------
# Nash blowup fan of a toric surface cone

def nash_fan(surface_cone: Cone2, n: int):
    """Fan of the normalized n-th Nash blowup with per-cone multiplicities."""
    if n < 1:
        raise ValueError("n must be positive")
    dual = dual_cone(surface_cone)
    basis = sorted(hilbert_basis(dual))
    if any(x < 0 or y < 0 for x, y in basis):
        raise DualNotNonnegative(
            f"dual cone generators {basis} leave the first quadrant"
        )
    sg = AffineSemigroup(dual, tuple(basis), surface_cone)
    cones = groebner_fan(jn_generators(sg, n), sg)
    mults = [multiplicity(gc.cone) for gc in cones]
    return fan_of_cones(cones, sg.support_cone), mults, any(m > 1 for m in mults)

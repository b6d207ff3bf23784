import random
from fractions import Fraction

import pytest

from nashfan.algebra import ContextMismatch, Poly
from nashfan.groebner import buchberger, normal_form, Ideal
from nashfan.lattice import Cone2, contains, validate_fan, vadd, vsub
from nashfan.nash import (
    DualNotNonnegative,
    Laurent,
    a3_ordering,
    a3_semigroup,
    divisible_by_lambda_minus_one,
    dn_set,
    jn_generators,
    l_vector,
    lambda_minus_one_power,
    nash_fan,
    phi_ideal_is_power,
    phi_linear,
    phi_specialize,
    pn_family,
    psi,
    theta,
    verify_paper,
)
from nashfan.semigroup import divides

N_RANGE = range(1, 13)


def in_family_plus_semigroup(sg, fam_points, b):
    return any(divides(sg, a, b) for a in fam_points)


def test_jn_generators_examples(a3, jn_basis):
    sg, ordering = a3
    ideal = jn_generators(sg, 1)
    assert len(ideal.generators) == 6
    u_minus_1_sq = Poly(sg, {(2, 0): 1, (1, 0): -2, (0, 0): 1})
    assert u_minus_1_sq in set(ideal.generators)
    assert buchberger(ideal, ordering).elements == jn_basis(1).elements
    with pytest.raises(ValueError):
        jn_generators(sg, 0)


def test_pn_family_n1():
    fam = pn_family(1)
    assert fam.p == (2, 0)
    assert fam.q == ((2, 1),)
    assert fam.r == ((2, 2),)
    assert fam.s == (3, 4)
    assert fam.points() == {(2, 0), (2, 1), (2, 2), (3, 4)}


def test_pn_family_size_and_incomparability():
    sg = a3_semigroup()
    for n in N_RANGE:
        fam = pn_family(n)
        pts = fam.points()
        assert len(pts) == n + 3
        for a in pts:
            for b in pts:
                if a != b:
                    assert not divides(sg, a, b)


def test_inner_family_identities():
    for n in N_RANGE:
        fam = pn_family(n)
        if n % 2 == 1:
            assert fam.p == vsub(fam.q[(n - 1) // 2], (0, 1))
            assert fam.s == vadd(fam.r[(n - 1) // 2], (1, 2))
        else:
            assert fam.p == vsub(fam.q[(n - 2) // 2], (1, 2))
            assert fam.s == vadd(fam.r[n // 2], (2, 3))


def test_family_endpoint_chains():
    for n in N_RANGE:
        if n % 2 == 1:
            if n >= 2:
                assert vadd(pn_family(n - 1).p, (1, 0)) == pn_family(n).p
            assert pn_family(n).p == pn_family(n + 1).p
        else:
            assert vadd(pn_family(n - 1).s, (3, 4)) == pn_family(n).s
            assert pn_family(n).s == pn_family(n + 1).s


def test_theta_maps_strands_forward():
    for n in N_RANGE:
        fam, nxt = pn_family(n), pn_family(n + 1)
        for i, q in enumerate(fam.q):
            assert theta(q) == nxt.q[i]
        for j, r in enumerate(fam.r):
            assert theta(r) == nxt.r[j]
        if n % 2 == 1:
            assert theta(fam.s) == nxt.r[(n + 1) // 2]
        else:
            assert theta(fam.p) == nxt.q[n // 2]


def test_consecutive_family_intersection_and_decomposition():
    for n in N_RANGE:
        fam, nxt = pn_family(n), pn_family(n + 1)
        inter = fam.points() & nxt.points()
        assert inter == ({fam.p} if n % 2 == 1 else {fam.s})
        shifted = {theta(a) for a in fam.points() - nxt.points()}
        extra = {nxt.p, nxt.s}
        assert shifted | extra == nxt.points()
        assert not shifted & extra


def test_family_shadow_decomposition():
    # P_n + sigma_Z = (P_n \ P_{n+1}) disjoint-union (P_{n+1} + sigma_Z),
    # checked over all lattice points with bounded coordinate sum
    sg = a3_semigroup()
    for n in N_RANGE:
        fam, nxt = pn_family(n).points(), pn_family(n + 1).points()
        dropped = fam - nxt
        for x in range(0, 61):
            for y in range(0, 61 - x):
                b = (x, y)
                if not contains(sg.dual_cone, b):
                    continue
                in_n = in_family_plus_semigroup(sg, fam, b)
                in_next = in_family_plus_semigroup(sg, nxt, b)
                assert in_n == ((b in dropped) or in_next)
                assert not ((b in dropped) and in_next)


def test_dn_set_examples():
    assert dn_set(1) == {(0, 0), (1, 0), (1, 1)}
    for n in N_RANGE:
        assert len(dn_set(n)) == (n + 1) * (n + 2) // 2


def test_dn_is_the_shadow_complement():
    # D_n = sigma_Z \ (P_n + sigma_Z) within a bounding box
    sg = a3_semigroup()
    for n in (1, 2, 3, 4, 5):
        fam = pn_family(n).points()
        dn = dn_set(n)
        top = max(x + y for x, y in dn) + 8
        box = {
            (x, y)
            for x in range(0, top + 1)
            for y in range(0, top + 1)
            if contains(sg.dual_cone, (x, y)) and x + y <= top
        }
        complement = {b for b in box if not in_family_plus_semigroup(sg, fam, b)}
        assert complement == dn


def test_dn_recursion_and_shift():
    for n in N_RANGE:
        if n >= 2:
            dropped = pn_family(n - 1).points() - pn_family(n).points()
            assert dn_set(n) == dn_set(n - 1) | dropped
            assert not dn_set(n - 1) & dropped
            assert len(dropped) == n + 1
        shifted = {vadd((1, 1), a) for a in dn_set(n)}
        assert shifted <= dn_set(n + 1)


def test_quotient_dimension_jumps():
    for n in range(2, 13):
        assert len(dn_set(n)) - len(dn_set(n - 1)) == n + 1


def test_phi_image_of_dn():
    for n in N_RANGE:
        image = {phi_linear(a) for a in dn_set(n)}
        if n % 2 == 1:
            half = (n + 1) // 2
            assert image == set(range(-half, half))
        else:
            half = n // 2
            assert image == set(range(-half, half + 1))
            tops = [a for a in dn_set(n) if phi_linear(a) == half]
            assert tops == [pn_family(n - 1).s]


def test_p_point_dominates_dn():
    ordering = a3_ordering()
    for n in N_RANGE:
        p = pn_family(n).p
        for a in dn_set(n):
            assert ordering.compare(p, a) == 1


def test_psi_extremes():
    for n in range(2, 13):
        fam = pn_family(n)
        dn = dn_set(n)
        if n % 2 == 1:
            arg = pn_family(n - 1).r[(n - 1) // 2]
            low = fam.q[(n - 1) // 2]
            assert psi(n, arg) == (n - 1) * (n + 2) + 1
        else:
            arg = pn_family(n - 1).s
            low = fam.p
        assert max(psi(n, a) for a in dn) == psi(n, arg)
        assert min(psi(n, a) for a in fam.points()) == psi(n, low)
        assert psi(n, arg) == psi(n, low)
    with pytest.raises(ValueError):
        psi(1, (0, 0))


def test_l_vector_parity():
    assert l_vector(1) == (0, 1)
    assert l_vector(2) == (4, -1)
    assert l_vector(3) == (4, -1)
    assert l_vector(4) == (8, -3)


def test_phi_specialize_examples(a3):
    sg, _ = a3
    assert phi_specialize(Poly.monomial(sg, (1, 1)) - 1).is_zero
    assert phi_specialize(Poly.monomial(sg, (1, 0)) - 1) == Laurent({-1: 1, 0: -1})
    assert phi_specialize(Poly.monomial(sg, (4, 4)) - 1).is_zero
    other_sg = a3_semigroup()
    assert phi_specialize(Poly.monomial(other_sg, (3, 4))) == Laurent({1: 1})


def test_phi_specialize_context_mismatch():
    from nashfan.semigroup import AffineSemigroup
    quadrant = AffineSemigroup.from_support_cone(Cone2((1, 0), (0, 1)))
    with pytest.raises(ContextMismatch):
        phi_specialize(Poly.monomial(quadrant, (1, 0)))


def test_phi_kernel_is_uv_minus_one(a3):
    # phi(f) = 0 iff f reduces to 0 modulo the ideal of uv - 1
    sg, ordering = a3
    kernel_basis = buchberger(Ideal((Poly.monomial(sg, (1, 1)) - 1,)), ordering)
    rng = random.Random(89)
    gens = sg.generators
    for _ in range(150):
        terms = {}
        for _ in range(3):
            e = (0, 0)
            for g in gens:
                k = rng.randint(0, 2)
                e = (e[0] + k * g[0], e[1] + k * g[1])
            terms[e] = terms.get(e, 0) + rng.randint(-2, 2)
        f = Poly(sg, terms)
        assert phi_specialize(f).is_zero == normal_form(f, kernel_basis).is_zero


def test_divisibility_by_lambda_minus_one():
    assert divisible_by_lambda_minus_one(lambda_minus_one_power(4), 4)
    assert not divisible_by_lambda_minus_one(lambda_minus_one_power(3), 4)
    assert divisible_by_lambda_minus_one(Laurent({}), 7)
    shifted = lambda_minus_one_power(2).shift(-5)
    assert divisible_by_lambda_minus_one(shifted, 2)


def test_phi_of_jn_is_the_power_ideal():
    for n in range(1, 7):
        assert phi_ideal_is_power(n)


def test_verify_paper_small(a3):
    report = verify_paper(2)
    assert report.all_passed
    ids_n1 = [c.claim_id for c in report.claims if c.n == 1]
    assert ids_n1 == ["a", "b", "c", "d"]
    ids_n2 = [c.claim_id for c in report.claims if c.n == 2]
    assert ids_n2 == ["a", "b", "c", "d", "e", "f", "g"]
    data = report.to_json()
    assert data["all_passed"] is True
    assert len(data["claims"]) == len(report.claims)
    with pytest.raises(ValueError):
        verify_paper(0)


def test_nash_fan_a3_is_singular():
    for n in (1, 2):
        fan, mults, singular = nash_fan(Cone2((0, 1), (4, -3)), n)
        assert singular
        assert validate_fan(fan)
        assert 2 in mults
        if n == 1:
            assert Cone2((0, 1), (2, -1)) in set(fan.cones)
            idx = list(fan.cones).index(Cone2((0, 1), (2, -1)))
            assert mults[idx] == 2


def test_nash_fan_smooth_cone():
    fan, mults, singular = nash_fan(Cone2((1, 0), (0, 1)), 1)
    assert not singular
    assert set(mults) == {1}
    assert validate_fan(fan)
    # cross-check the marks of the quadrant basis by direct computation
    from nashfan.algebra import MatrixOrdering
    from nashfan.semigroup import AffineSemigroup
    sg = AffineSemigroup.from_support_cone(Cone2((1, 0), (0, 1)))
    ordering = MatrixOrdering(((2, 1), (1, 1)), sg)
    basis = buchberger(jn_generators(sg, 1), ordering)
    assert basis.marks() == {(2, 0), (1, 1), (0, 2)}


def test_nash_fan_rejects_bad_coordinates():
    with pytest.raises(DualNotNonnegative):
        nash_fan(Cone2((1, 0), (1, 2)), 1)
    with pytest.raises(ValueError):
        nash_fan(Cone2((0, 1), (4, -3)), 0)


def test_laurent_arithmetic():
    a = Laurent({0: 1, 1: -1})
    b = Laurent({-1: Fraction(1, 2)})
    assert a * b == Laurent({-1: Fraction(1, 2), 0: Fraction(-1, 2)})
    assert (a - a).is_zero
    assert a + b == Laurent({-1: Fraction(1, 2), 0: 1, 1: -1})
    assert a.shift(3) == Laurent({3: 1, 4: -1})

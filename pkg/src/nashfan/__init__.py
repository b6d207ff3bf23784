"""Exact Groebner bases and fans of ideals in 2-D affine semigroup rings,
applied to higher Nash blowups of toric surface singularities."""

from .lattice import (
    Cone2,
    Fan2,
    NotFullDimensional,
    contains,
    cone_from_inequalities,
    dual_cone,
    hilbert_basis,
    multiplicity,
    validate_fan,
)
from .semigroup import (
    AffineSemigroup,
    InvalidWeight,
    divides,
    enumerate_below,
    is_member,
    min_common_multiples,
)
from .algebra import (
    ContextMismatch,
    MatrixOrdering,
    Poly,
    WeightOutsideSigma,
    ZeroPolynomial,
    initial_form,
    leading_monomial,
    weight_refine,
)
from .groebner import (
    Ideal,
    MarkedBasis,
    PairQueueExhausted,
    QuotientNotFinite,
    buchberger,
    colon_contains,
    ideal_membership,
    normal_form,
    s_polynomials,
    standard_monomials,
)
from .fan import (
    GroebnerCone,
    SweepStalled,
    basis_at_weight,
    cone_of_basis,
    groebner_fan,
    interior_weight,
)
from .nash import (
    DualNotNonnegative,
    Laurent,
    PnFamily,
    VerificationReport,
    a3_ordering,
    a3_semigroup,
    dn_set,
    jn_generators,
    l_vector,
    nash_fan,
    phi_linear,
    phi_specialize,
    pn_family,
    psi,
    theta,
    verify_paper,
)

__all__ = [name for name in dir() if not name.startswith("_")]

import pytest

from nashfan.groebner import buchberger
from nashfan.nash import a3_ordering, a3_semigroup, jn_generators


@pytest.fixture(scope="session")
def a3():
    sg = a3_semigroup()
    return sg, a3_ordering(sg)


@pytest.fixture(scope="session")
def jn_basis(a3):
    """Memoized reduced bases of J_n; shared so J_8 is computed once."""
    sg, ordering = a3
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = buchberger(jn_generators(sg, n), ordering)
        return cache[n]

    return get

"""Seeded random (R, J, I) instances for the property suites."""

import random

from assocgraded import SemigroupRing, build_semigroup, is_symmetric, reduction_analysis
from assocgraded.series import Series

# symmetric semigroups (checked against the enumeration oracle in the tests)
SYMMETRIC_POOL = [(2, 5), (3, 4), (3, 5), (4, 5, 6), (4, 9, 10), (5, 6, 9), (5, 6, 7, 8),
                  (4, 6, 7), (3, 7), (4, 5)]


def random_element(R, rng, top):
    S = [s for s in R.S.elements_below(top) if s > 0]
    v = rng.choice(S)
    higher = [s for s in S if s > v]
    terms = {v: 1}
    if higher and rng.random() < 0.5:
        terms[rng.choice(higher)] = rng.choice([-2, -1, 1, 2])
    return Series(terms)


def random_reduction(I, rng):
    """A random element of least valuation in I; it generates a minimal reduction."""
    R = I.ring
    basis = I.basis_elements()
    x = I.least_element()
    for b in basis[1:3]:
        c = rng.randint(-2, 2)
        if c:
            x = x + b * Series({0: c})
    J = R.ideal(x)
    assert reduction_analysis(J, I)[0]
    return J


def random_instance(seed, pool=SYMMETRIC_POOL):
    rng = random.Random(seed)
    gens = rng.choice(pool)
    R = SemigroupRing(build_semigroup(gens))
    top = 2 * R.S.conductor + max(gens) + 1
    k = rng.randint(2, 3)
    while True:
        I = R.ideal(*[random_element(R, rng, top) for _ in range(k)])
        if R.min_generators(I) >= 2:
            break
    J = random_reduction(I, rng)
    return R, J, I


def check_pool():
    return all(is_symmetric(build_semigroup(g)) for g in SYMMETRIC_POOL)

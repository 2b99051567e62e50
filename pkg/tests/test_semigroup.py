import pytest
from hypothesis import given, settings, strategies as st
from math import gcd
from functools import reduce

from assocgraded import build_semigroup, is_symmetric
from assocgraded.errors import EmptyGenerators, GcdNotOne

from oracles import frobenius, semigroup_elements, symmetric


@pytest.mark.parametrize("gens,frob,ngaps", [
    ((4, 9, 10), 15, 8), ((3, 7, 11), 8, 5), ((3, 4, 5), 2, 2), ((5, 6, 9), 13, 7),
    ((4, 5, 6), 7, 4), ((5, 6, 7, 8), 9, 5),
])
def test_frobenius_and_gaps(gens, frob, ngaps):
    S = build_semigroup(gens)
    assert S.frobenius == frob
    assert len(S.gaps) == ngaps
    assert S.conductor == frob + 1


def test_minimal_generators_are_extracted():
    S = build_semigroup([4, 8, 9, 10, 12])
    assert S.generators == (4, 9, 10)
    assert S.multiplicity == 4


def test_membership():
    S = build_semigroup([4, 9, 10])
    assert 13 in S and 15 not in S and 16 in S and 0 in S


@pytest.mark.parametrize("gens,expected", [
    ((4, 9, 10), True), ((5, 6, 7, 8), True), ((4, 5, 6), True), ((5, 6, 9), True),
    ((3, 4, 5), False), ((3, 7, 11), False),
])
def test_symmetric(gens, expected):
    assert is_symmetric(build_semigroup(gens)) is expected


def test_errors():
    with pytest.raises(GcdNotOne):
        build_semigroup([4, 6])
    with pytest.raises(EmptyGenerators):
        build_semigroup([])


gen_sets = st.lists(st.integers(2, 13), min_size=1, max_size=4).filter(
    lambda g: reduce(gcd, g) == 1)


@settings(max_examples=60, deadline=None)
@given(gen_sets)
def test_against_enumeration(gens):
    S = build_semigroup(gens)
    F, gaps = frobenius(gens)
    assert S.frobenius == F
    assert sorted(S.gaps) == gaps
    bound = F + 2 * max(gens)
    assert set(S.elements_below(bound)) == semigroup_elements(gens, bound)
    assert is_symmetric(S) == symmetric(gens)

import pytest

from assocgraded import (MonomialQuotientRing, SemigroupRing, build_semigroup, ci_assess,
                         hilbert_functions, present_F, present_G)
from assocgraded.errors import NotMinimalGenerators
from assocgraded.presentation import monomials, presentation_summary


def ring(*gens):
    return SemigroupRing(build_semigroup(gens))


def test_monomial_order():
    assert monomials(3, 2) == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]


def test_gorenstein_example_presentation():
    R = ring(4, 9, 10)
    I = R.ideal(8, 9, 10)
    G = present_G(I)
    assert G.generator_degrees == [2, 2]
    assert presentation_summary(R, G)["representatives"] == ["t^4*X^2 - Z^2", "X*Z - Y^2"]
    assert G.verified
    hd = hilbert_functions(I, N=7)
    assert ci_assess(G, 1, hd.hilb_G[:8])["verdict"].startswith("complete intersection")
    # normally flat: L and K have the same generator counts per degree
    F = present_F(I)
    assert F.new_generators == G.new_generators


def test_conormal_failure_presentation():
    R = ring(3, 7, 11)
    G = present_G(R.ideal(6, 7, 11))
    assert G.generator_degrees == [1, 2, 2, 2, 3]
    assert ci_assess(G, 1, [])["verdict"] == "not CI"


def test_fiber_presentation():
    R = ring(3, 4, 5)
    I = R.ideal(3, 4)
    F = present_F(I)
    assert presentation_summary(R, F)["representatives"] == ["Y^3"]
    G = present_G(I)
    assert G.generator_degrees == [1, 1, 3]
    assert F.relation_type_lower_bound <= G.relation_type_lower_bound


def test_parameter_ideal_has_linear_fiber():
    R = ring(4, 5, 6)
    F = present_F(R.ideal(4))
    assert F.total_generators == 0 and F.relation_type_lower_bound == 1


def test_inline_examples():
    Q = MonomialQuotientRing(("x", "y"), [(2, 1), (0, 3)])
    I = Q.ideal("x")
    G, F = present_G(I), present_F(I)
    assert G.kernel_dims[:2] == [0, 0] and min(G.new_generators) == 2
    assert F.kernel_dims == [0] * 7 and F.relation_type_lower_bound == 1
    Q = MonomialQuotientRing(("x", "y", "z"), [(2, 0, 0), (0, 2, 0), (1, 1, 2)])
    I = Q.ideal("y", "z")
    F = present_F(I)
    assert presentation_summary(Q, F)["representatives"] == ["Y^2"]
    G = present_G(I)
    assert G.relation_type_lower_bound >= 3
    assert "x*Y*Z^2" in presentation_summary(Q, G)["representatives"]


def test_not_minimal_generators():
    R = ring(4, 9, 10)
    I = R.ideal(8, 9, 10)
    with pytest.raises(NotMinimalGenerators):
        present_G(I, generators=[R.t(8), R.t(9), R.t(10), R.t(12)])
    with pytest.raises(NotMinimalGenerators):
        present_F(I, generators=[R.t(8), R.t(9)])

import pytest

from assocgraded import (SemigroupRing, analyze_filtration, build_semigroup, cm_check_G,
                         fiber_cm_dim1, hilbert_functions, index_of_nilpotency, normal_flatness,
                         principal_reduction, quotient_hilbert_function, ratliff_rush,
                         reduction_analysis, reduction_number, rr_all_powers, socle_table)
from assocgraded.errors import NoReductionWithinBound, NotContained


def ring(*gens):
    return SemigroupRing(build_semigroup(gens))


def test_reduction_numbers():
    R = ring(4, 9, 10)
    assert reduction_analysis(R.ideal(8), R.ideal(8, 9, 10)) == (True, 2)
    R = ring(4, 5, 6)
    I = R.ideal(4, 5)
    assert reduction_number(R.ideal(4), I) == 3
    assert reduction_number(R.ideal("t^4 - t^5"), I) == 3
    assert reduction_number(I, I) == 0


def test_non_reductions():
    R = ring(4, 5, 6)
    I = R.ideal(4, 5)
    with pytest.raises(NotContained):
        reduction_number(R.ideal(4, 5, 6), I)
    with pytest.raises(NoReductionWithinBound):
        reduction_number(R.ideal(8), I, bound=5)


def test_index_of_nilpotency():
    R = ring(4, 5, 6)
    I = R.ideal(4, 5)
    assert index_of_nilpotency(R.ideal(4), I) == 1
    assert index_of_nilpotency(R.ideal("t^4 - t^5"), I) == 2
    R = ring(4, 9, 10)
    assert index_of_nilpotency(R.ideal(8), R.ideal(8, 9, 10)) == 2


def test_principal_reduction_has_least_valuation():
    R = ring(3, 7, 11)
    I = R.ideal(6, 7, 11)
    J = principal_reduction(I)
    assert J == R.ideal(6)
    assert reduction_analysis(J, I)[0]


def test_hilbert_functions():
    R = ring(4, 9, 10)
    hd = hilbert_functions(R.ideal(8, 9, 10))
    assert hd.hilb_F[:4] == [1, 3, 4, 4]
    assert hd.e_I == 8 and hd.e_F == 4
    R = ring(3, 4, 5)
    hd = hilbert_functions(R.ideal(3, 4))
    assert hd.e_I == 3 and hd.e_F == 3


def test_quotient_hilbert_functions():
    R = ring(5, 6, 9)
    assert quotient_hilbert_function(R.ideal(5), R.maximal_ideal()) == [1, 2, 1, 1]
    R = ring(4, 5, 6)
    assert quotient_hilbert_function(R.ideal("t^4 - t^5"), R.ideal(4, 5)) == [2, 1, 1]


def test_normal_flatness():
    R = ring(3, 7, 11)
    nf = normal_flatness(R.ideal(6, 7, 11), N=6)
    assert nf.free_degrees[1] is False
    assert all(nf.free_degrees[2:]) and nf.ranks[2:] == [3] * 5
    R = ring(4, 9, 10)
    assert normal_flatness(R.ideal(8, 9, 10)).normally_flat


def test_ratliff_rush_closures():
    R = ring(5, 6, 7, 8)
    rr = ratliff_rush(R.ideal(5, 6, 7), J=R.ideal(5))
    assert rr.closure == R.maximal_ideal() and rr.certified
    R = ring(4, 5, 6)
    m, I, J = R.maximal_ideal(), R.ideal(4, 5), R.ideal(4)
    for i in range(1, 6):
        assert ratliff_rush(I ** i, J=J ** i).closure == m ** i
    assert not rr_all_powers(I, 3, J)


def test_cohen_macaulay_verdicts():
    R = ring(3, 7, 11)
    I, J = R.ideal(6, 7, 11), R.ideal(6)
    assert cm_check_G(I, J).holds
    assert not fiber_cm_dim1(I, J).holds
    R = ring(5, 6, 7, 8)
    v = cm_check_G(R.ideal(5, 6, 7), R.ideal(5))
    assert not v.holds and v.witness["index"] == 2
    R = ring(4, 5, 6)
    assert not cm_check_G(R.ideal(4, 5), R.ideal(4)).holds
    R = ring(4, 9, 10)
    assert fiber_cm_dim1(R.ideal(8, 9, 10), R.ideal(8)).holds


def test_socle_tables():
    R = ring(4, 9, 10)
    assert socle_table(R.ideal(8), R.ideal(8, 9, 10)) == [0, 0, 1]
    R = ring(5, 6, 9)
    table = socle_table(R.ideal(5), R.maximal_ideal())
    assert table[3] == 1 and any(table[:3])


def test_analyze_filtration_report():
    R = ring(4, 9, 10)
    rep = analyze_filtration(R.ideal(8, 9, 10), R.ideal(8))
    assert (rep.r, rep.s, rep.e_I, rep.e_F) == (2, 2, 8, 4)
    assert rep.normally_flat and rep.G_CM.holds and rep.F_CM_dim1.holds
    assert rep.e_I == R.colength(R.ideal(8, 9, 10)) * rep.e_F

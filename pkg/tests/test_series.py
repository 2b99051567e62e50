from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from assocgraded import QQ, PrimeField, Series, parse_field
from assocgraded.errors import FieldMismatch, ParseError
from assocgraded.series import ModP, format_series, parse_series


def test_parse_and_format_round_trip():
    f = parse_series("t^4 - t^5")
    assert f.terms == {4: 1, 5: -1}
    assert format_series(f) == "t^4 - t^5"
    assert parse_series("1/2*t^3 + 2").terms == {0: 2, 3: Fraction(1, 2)}


def test_parse_error_has_column():
    with pytest.raises(ParseError) as e:
        parse_series("t^4 + * t")
    assert e.value.column is not None


def test_truncated_product_precision():
    a = Series({2: 1, 3: 1}, precision=10)
    b = Series({5: 1}, precision=None)
    c = a * b
    assert c.precision == 15
    assert c.terms == {7: 1, 8: 1}


def test_binomial_coefficient_survives_over_rationals():
    f = parse_series("t^4 - t^5")
    assert (f * f).terms == {8: 1, 9: -2, 10: 1}


def test_prime_field():
    F = parse_field("gf:7")
    assert F(3) * F(5) == F(1)
    assert (F(1) / F(3)) * F(3) == F(1)
    with pytest.raises(ValueError):
        PrimeField(8)


def test_small_prime_warns():
    with pytest.warns(UserWarning):
        parse_field("gf:3")


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        Series({1: 1}, None, QQ) + Series({1: 1}, None, PrimeField(5))


polys = st.dictionaries(st.integers(0, 12), st.integers(-5, 5), max_size=5)


@settings(max_examples=100, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms_exact(a, b, c):
    A, B, C = (Series(x) for x in (a, b, c))
    assert A * B == B * A
    assert (A * B) * C == A * (B * C)
    assert A * (B + C) == A * B + A * C
    assert A + B - B == A


@settings(max_examples=100, deadline=None)
@given(polys, polys, st.integers(1, 20), st.integers(1, 20))
def test_truncation_commutes_with_product(a, b, p, q):
    A, B = Series(a), Series(b)
    prod = A.truncate(p) * B.truncate(q)
    exact = A * B
    if prod.precision is not None:
        assert prod.agrees_below(exact, prod.precision)


def test_modp_element():
    assert ModP(12, 5) == ModP(2, 5)

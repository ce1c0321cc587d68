from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from permratio.errors import NonRational, ParseError
from permratio.exact import (
    ONE,
    Sqrt2,
    as_rational,
    conjugate,
    format_decimal,
    format_rational,
    parse_rational,
    sqrt2_mul,
    sqrt2_pow,
)

HALF_UP = Sqrt2(F(1, 2), F(1, 2))
HALF_DOWN = Sqrt2(F(1, 2), F(-1, 2))

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
elems = st.builds(Sqrt2, small, small)


def test_mul_examples():
    x = Sqrt2(1, 1)
    assert sqrt2_mul(x, x) == Sqrt2(3, 2)
    assert sqrt2_mul(HALF_UP, HALF_DOWN) == Sqrt2(F(-1, 4), 0)
    assert sqrt2_mul(Sqrt2(), x) == Sqrt2()


def test_pow_examples():
    x = Sqrt2(1, 1)
    assert sqrt2_pow(x, 0) == ONE
    assert sqrt2_pow(x, 3) == Sqrt2(7, 5)
    assert sqrt2_pow(HALF_UP, 2) == Sqrt2(F(3, 4), F(1, 2))
    with pytest.raises(ValueError):
        sqrt2_pow(x, -1)


def test_conjugate_examples():
    assert conjugate(Sqrt2(1, 1)) == Sqrt2(1, -1)
    assert conjugate(Sqrt2(3, 0)) == Sqrt2(3, 0)
    assert conjugate(sqrt2_pow(Sqrt2(1, 1), 3)) == Sqrt2(7, -5)


def test_as_rational():
    assert as_rational(Sqrt2(F(8, 3), 0)) == F(8, 3)
    assert as_rational(Sqrt2(2, 0)) == 2
    with pytest.raises(NonRational):
        as_rational(Sqrt2(1, 1))


def test_components_are_fractions():
    x = Sqrt2(2, 4)
    assert isinstance(x.a, F) and isinstance(x.b, F)
    with pytest.raises(TypeError):
        Sqrt2(0.5, 0)


@given(elems, elems, elems)
def test_ring_laws(x, y, z):
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(elems, elems)
def test_conjugation_is_a_ring_homomorphism(x, y):
    assert conjugate(conjugate(x)) == x
    assert conjugate(x * y) == conjugate(x) * conjugate(y)
    assert conjugate(x + y) == conjugate(x) + conjugate(y)


@given(elems)
def test_norm_is_rational(x):
    n = x * conjugate(x)
    assert n.b == 0
    assert n.a == x.norm()


@given(elems, st.integers(min_value=0, max_value=12))
def test_pow_matches_repeated_multiplication(x, e):
    acc = ONE
    for _ in range(e):
        acc = sqrt2_mul(acc, x)
    assert sqrt2_pow(x, e) == acc


@given(elems, elems)
def test_results_stay_in_lowest_terms(x, y):
    p = x * y
    for c in (p.a, p.b):
        assert c.denominator > 0
        assert F(c.numerator, c.denominator) == c


@pytest.mark.parametrize(
    "value, text",
    [(F(8, 3), "8/3"), (F(2), "2"), (F(-19, 6), "-19/6"), (F(0), "0"), (F(6, 4), "3/2")],
)
def test_rational_format_roundtrip(value, text):
    assert format_rational(value) == text
    assert parse_rational(text) == value


def test_parse_rational_rejects_junk():
    for bad in ("1/0", "x", "1/-2", "1/2/3"):
        with pytest.raises(ParseError):
            parse_rational(bad)


def test_format_decimal():
    assert format_decimal(F(8, 3)) == "2.666666666667"
    assert format_decimal(F(19, 6)) == "3.166666666667"
    assert format_decimal(F(2)) == "2.000000000000"
    assert format_decimal(F(-1, 8), 2) == "-0.13"

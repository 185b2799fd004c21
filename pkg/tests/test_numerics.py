from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stirlingkit.numerics import (
    format_rational,
    is_reduced,
    parse_int,
    parse_rational,
    rat_add,
    rat_div,
    rat_mul,
)

rationals = st.fractions(max_denominator=10**6)


def test_rat_add_examples():
    assert rat_add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert rat_add(Fraction(7, 9), 0) == Fraction(7, 9)
    zero = rat_add(Fraction(1, 2), Fraction(-1, 2))
    assert (zero.numerator, zero.denominator) == (0, 1)


def test_rat_mul_examples():
    assert rat_mul(Fraction(2, 3), Fraction(3, 4)) == Fraction(1, 2)
    assert rat_mul(Fraction(-5, 7), 1) == Fraction(-5, 7)
    zero = rat_mul(Fraction(-5, 7), 0)
    assert (zero.numerator, zero.denominator) == (0, 1)


def test_rat_div_examples():
    assert rat_div(Fraction(1, 2), Fraction(1, 4)) == 2
    assert rat_div(Fraction(3, 11), 1) == Fraction(3, 11)
    with pytest.raises(ZeroDivisionError):
        rat_div(1, 0)


def test_floats_rejected():
    with pytest.raises(TypeError):
        rat_add(0.5, 1)


@given(rationals, rationals)
def test_add_commutes_and_reduced(a, b):
    assert rat_add(a, b) == rat_add(b, a)
    assert is_reduced(rat_add(a, b))


@given(rationals, rationals, rationals)
def test_mul_distributes(a, b, c):
    lhs = rat_mul(a, rat_add(b, c))
    assert lhs == rat_add(rat_mul(a, b), rat_mul(a, c))
    assert is_reduced(lhs)


@given(rationals, rationals.filter(lambda q: q != 0))
def test_div_inverts_mul(a, b):
    q = rat_div(a, b)
    assert is_reduced(q)
    assert rat_mul(q, b) == a


def test_is_reduced_validator():
    assert is_reduced(Fraction(0))
    assert is_reduced(12)
    assert not is_reduced(0.5)


@pytest.mark.parametrize("text,value", [
    ("5", Fraction(5)), ("-3/4", Fraction(-3, 4)), ("6/8", Fraction(3, 4)), (" +2/1 ", Fraction(2)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "1.5", "1e3", "1/0", "a", "1/-2", "--1"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


@given(rationals)
def test_format_parse_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_format_and_parse_int():
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(4, 2)) == "2"
    big = 10**40 + 1
    assert parse_int(str(big)) == big
    with pytest.raises(ValueError):
        parse_int("12x")

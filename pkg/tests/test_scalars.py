from fractions import Fraction
from math import gcd

from hypothesis import given
from hypothesis import strategies as st

from kpeterson.scalars import Rational, rational_from_text, rational_to_text

rationals = st.builds(
    Rational,
    st.integers(min_value=-(10**6), max_value=10**6),
    st.integers(min_value=1, max_value=10**6),
)


@given(rationals, rationals)
def test_exact_addition_roundtrip(a, b):
    assert (a + b) - b == a


@given(rationals, rationals)
def test_reduced_after_arithmetic(a, b):
    c = a * b + b
    assert c.denominator > 0
    assert gcd(int(c.numerator), int(c.denominator)) == 1


def test_text_roundtrip():
    assert rational_to_text(Rational(-3, 6)) == "-1/2"
    assert rational_to_text(Rational(4)) == "4"
    assert rational_from_text("-1/2") == Rational(-1, 2)
    assert rational_from_text(" 7 ") == 7


@given(rationals)
def test_text_parse_inverse(a):
    assert rational_from_text(rational_to_text(a)) == a


def test_agrees_with_stdlib_fractions():
    a, b = Rational(22, 7), Rational(-5, 3)
    fa, fb = Fraction(22, 7), Fraction(-5, 3)
    got = a * b - a / b
    want = fa * fb - fa / fb
    assert got.numerator == want.numerator and got.denominator == want.denominator

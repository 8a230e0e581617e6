import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from wigner_ur import InexactValue, SqrtRational
from wigner_ur.sqrtrational import exact_sum, split_square

fractions = st.fractions(min_value=0, max_value=10**6, max_denominator=10**6)


def test_canonical_form():
    assert SqrtRational.sqrt(8) == SqrtRational(Fraction(2), 2)
    assert SqrtRational.sqrt(Fraction(1, 2)) == SqrtRational(Fraction(1, 2), 2)
    assert SqrtRational.sqrt(9) == 3
    assert SqrtRational.sqrt(0) == 0 and not SqrtRational.sqrt(0)


def test_split_square():
    assert split_square(72) == (6, 2)
    assert split_square(1) == (1, 1)
    assert split_square(2**40 * 3) == (2**20, 3)


@pytest.mark.parametrize("text", ["0", "+sqrt(1/2)", "-sqrt(3)", "+sqrt(4/9)", "-sqrt(9/4900)"])
def test_parse_str_roundtrip(text):
    x = SqrtRational.parse(text)
    assert SqrtRational.parse(str(x)) == x


def test_parse_rejects():
    with pytest.raises(ValueError):
        SqrtRational.parse("sqrt(2)")
    with pytest.raises(ValueError):
        SqrtRational.sqrt(-1)


@given(fractions, fractions)
def test_product_is_exact(a, b):
    x, y = SqrtRational.sqrt(a), SqrtRational.sqrt(b, -1)
    assert (x * y).radicand == a * b
    assert (x * y).sign == (-1 if a and b else 0)


@given(fractions)
def test_float_matches_math(a):
    assert float(SqrtRational.sqrt(a)) == pytest.approx(math.sqrt(a), rel=1e-15)


def test_same_core_sum_stays_exact():
    s = SqrtRational.sqrt(2) + SqrtRational.sqrt(8)
    assert s == SqrtRational.sqrt(18)
    assert SqrtRational.sqrt(2) - SqrtRational.sqrt(2) == 0


def test_mixed_core_sum_is_flagged_inexact():
    s = SqrtRational.sqrt(2) + SqrtRational.sqrt(3)
    assert isinstance(s, InexactValue) and s.inexact
    with mpmath.workprec(113):
        assert abs(s.value - (mpmath.sqrt(2) + mpmath.sqrt(3))) < mpmath.mpf(2) ** -110
    t = exact_sum([SqrtRational.sqrt(2), SqrtRational.sqrt(3), -SqrtRational.sqrt(3)])
    assert t == SqrtRational.sqrt(2)


def test_division_and_inverse():
    x = SqrtRational.sqrt(Fraction(3, 5), -1)
    assert x * x.inverse() == 1
    assert x / x == 1
    assert x / 2 == SqrtRational.sqrt(Fraction(3, 20), -1)
    with pytest.raises(ZeroDivisionError):
        SqrtRational.sqrt(0).inverse()

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gvkit.arith import content, int_gcd, lcm_denominators, rat_canon


def binary_gcd(a, b):
    """Stein's algorithm, kept deliberately naive."""
    a, b = abs(a), abs(b)
    if a == 0:
        return b
    if b == 0:
        return a
    shift = 0
    while (a | b) & 1 == 0:
        a >>= 1
        b >>= 1
        shift += 1
    while a & 1 == 0:
        a >>= 1
    while b:
        while b & 1 == 0:
            b >>= 1
        if a > b:
            a, b = b, a
        b -= a
    return a << shift


def test_gcd_examples():
    assert int_gcd(12, 18) == 6
    assert int_gcd(0, 5) == 5
    assert int_gcd(0, 0) == 0
    assert int_gcd(2**130, 3 * 2**128) == 2**128


@given(st.integers(-(2**256), 2**256), st.integers(-(2**256), 2**256))
def test_gcd_matches_binary_gcd(a, b):
    assert int_gcd(a, b) == binary_gcd(a, b)


def test_rat_canon():
    assert rat_canon(4, -6) == Fraction(-2, 3)
    q = rat_canon(4, -6)
    assert (q.numerator, q.denominator) == (-2, 3)
    z = rat_canon(0, 7)
    assert (z.numerator, z.denominator) == (0, 1)
    assert rat_canon(6, 4) == Fraction(3, 2)
    with pytest.raises(ZeroDivisionError):
        rat_canon(1, 0)


@given(st.integers(-(10**40), 10**40), st.integers(1, 10**40))
def test_rat_canon_is_reduced(n, d):
    q = rat_canon(n, d)
    assert q.denominator > 0
    assert int_gcd(q.numerator, q.denominator) == 1
    assert q * d == n


def test_helpers():
    assert content([6, -9, 15]) == 3
    assert content([]) == 0
    assert lcm_denominators([Fraction(1, 4), Fraction(5, 6), 2]) == 12

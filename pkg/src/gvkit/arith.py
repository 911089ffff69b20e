"""Exact integer and rational arithmetic.

Python's ``int`` is already an arbitrary-precision signed integer and
``fractions.Fraction`` keeps numerator/denominator reduced with a positive
denominator, so both serve directly as the coefficient domain. This module
only adds the canonicalisation helpers the rest of the package leans on.
"""

from __future__ import annotations

import math
from fractions import Fraction

BigInt = int
BigRat = Fraction


def int_gcd(a: int, b: int) -> int:
    """Nonnegative gcd, with ``int_gcd(0, 0) == 0``."""
    return math.gcd(a, b)


def rat_canon(num: int, den: int) -> Fraction:
    """Reduced fraction with positive denominator."""
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def to_rat(value: int | str | Fraction) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def content(coeffs) -> int:
    """gcd of an iterable of integers (0 for an empty iterable)."""
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def lcm_denominators(coeffs) -> int:
    d = 1
    for c in coeffs:
        d = d * c.denominator // math.gcd(d, c.denominator)
    return d

"""Generalized binomial coefficients, Pochhammer symbols and product factors.

All arithmetic is exact: integers are unbounded and rationals are
``fractions.Fraction`` values, which normalize to lowest terms with a
positive denominator on construction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rat = Union[int, Fraction]


def binom(a: int, b: int) -> int:
    """Generalized binomial coefficient.

    Returns 0 for b < 0; otherwise a(a-1)...(a-b+1)/b!, which is an integer
    for every integer a, including negative a (falling-factorial extension).
    """
    if b < 0:
        return 0
    if a >= 0:
        return math.comb(a, b)
    # C(a, b) = (-1)^b * C(b - a - 1, b) for a < 0
    value = math.comb(b - a - 1, b)
    return -value if b % 2 else value


def pochhammer(x: Rat, j: int) -> Fraction:
    """Rising factorial (x)_j = x (x+1) ... (x+j-1), with (x)_0 = 1."""
    if j < 0:
        raise ValueError("pochhammer index must be nonnegative")
    x = Fraction(x)
    result = Fraction(1)
    for i in range(j):
        result *= x + i
    return result


def delta(k: int, mu: Rat) -> Fraction:
    """The k-th factor in the product evaluation of Z_n(1,1,·) at its argument.

    Three cases: k = 0 gives 2; positive even k = 2j and odd k = 2j-1 are
    ratios of Pochhammer symbols with half-integer shifts.
    """
    if k < 0:
        raise ValueError("delta index must be nonnegative")
    mu = Fraction(mu)
    if k == 0:
        return Fraction(2)
    half = Fraction(1, 2)
    if k % 2 == 0:
        j = k // 2
        num = pochhammer(mu + 2 * j + 2, j) * pochhammer(mu / 2 + 2 * j + 3 * half, j - 1)
        den = pochhammer(j, j) * pochhammer(mu / 2 + j + 3 * half, j - 1)
    else:
        j = (k + 1) // 2
        num = pochhammer(mu + 2 * j, j - 1) * pochhammer(mu / 2 + 2 * j + half, j)
        den = pochhammer(j, j) * pochhammer(mu / 2 + j + half, j - 1)
    return num / den


def delta_product(n: int, mu: Rat) -> Fraction:
    """Product of delta(k, mu) for k = 0..n-1 (the Z_n(1,1,·) evaluation)."""
    result = Fraction(1)
    for k in range(n):
        result *= delta(k, mu)
    return result


def delta_even_product(n: int, mu: Rat) -> Fraction:
    """(1/2^n) * product of delta(2k, mu) for k = 0..n-1 (the T_n(1,·) evaluation)."""
    result = Fraction(1)
    for k in range(n):
        result *= delta(2 * k, mu)
    return result / 2**n

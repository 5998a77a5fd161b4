"""Exact integer/rational substrate: Bernoulli numbers and polynomials,
elementary symmetric functions and power sums.

Integers are Python ints and rationals are :class:`fractions.Fraction`,
which is always kept in lowest terms with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "bernoulli_number",
    "bernoulli_numbers",
    "bernoulli_polynomial",
    "bernoulli_polynomial_eval",
    "elementary_symmetric",
    "elementary_symmetric_all",
    "power_sum",
]


@lru_cache(maxsize=None)
def bernoulli_numbers(n: int) -> tuple[Fraction, ...]:
    """B_0..B_n with B_1 = -1/2, from sum_{i<=j} C(j+1, i) B_i = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return (Fraction(1),)
    prev = bernoulli_numbers(n - 1)
    acc = sum((comb(n + 1, i) * b for i, b in enumerate(prev)), Fraction(0))
    return prev + (-acc / (n + 1),)


def bernoulli_number(j: int) -> Fraction:
    return bernoulli_numbers(j)[j]


@lru_cache(maxsize=None)
def bernoulli_polynomial(j: int) -> tuple[Fraction, ...]:
    """Coefficients of B_j(x) in ascending powers of x.

    B_j(x) = sum_i C(j, i) B_i x^(j-i); the leading coefficient is 1.
    """
    bs = bernoulli_numbers(j)
    coeffs = [Fraction(0)] * (j + 1)
    for i in range(j + 1):
        coeffs[j - i] = comb(j, i) * bs[i]
    return tuple(coeffs)


def bernoulli_polynomial_eval(j: int, x) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(bernoulli_polynomial(j)):
        acc = acc * x + c
    return acc


def elementary_symmetric_all(k: Iterable[int]) -> list[int]:
    """[e_0, e_1, ..., e_r] of the values in k."""
    e = [1]
    for x in k:
        e.append(0)
        for s in range(len(e) - 1, 0, -1):
            e[s] += x * e[s - 1]
    return e


def elementary_symmetric(s: int, k: Sequence[int]) -> int:
    if s < 0:
        raise ValueError("s must be nonnegative")
    if s > len(k):
        return 0
    return elementary_symmetric_all(k)[s]


def power_sum(s: int, k: Sequence[int]) -> int:
    if s < 0:
        raise ValueError("s must be nonnegative")
    return sum(x**s for x in k)

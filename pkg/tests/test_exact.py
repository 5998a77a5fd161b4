from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from galois_lab.exact import (
    bernoulli_number,
    bernoulli_polynomial,
    bernoulli_polynomial_eval,
    elementary_symmetric,
    power_sum,
)


def akiyama_tanigawa(n):
    # Independent route to B_n; yields B_1 = +1/2.
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


@pytest.mark.parametrize("j,expected", [(0, Fraction(1)), (3, Fraction(0)), (2, Fraction(1, 6))])
def test_bernoulli_number_examples(j, expected):
    assert bernoulli_number(j) == expected


def test_bernoulli_convention_b1():
    assert bernoulli_number(1) == Fraction(-1, 2)


@pytest.mark.parametrize("j", [0] + list(range(2, 31)))
def test_bernoulli_matches_akiyama_tanigawa(j):
    assert bernoulli_number(j) == akiyama_tanigawa(j)


def test_odd_bernoulli_vanish():
    assert all(bernoulli_number(j) == 0 for j in range(3, 40, 2))


@pytest.mark.parametrize(
    "j,x,expected",
    [(1, 5, Fraction(9, 2)), (2, 0, Fraction(1, 6)), (3, 3, Fraction(15))],
)
def test_bernoulli_polynomial_examples(j, x, expected):
    assert bernoulli_polynomial_eval(j, x) == expected


def test_b3_at_3_by_telescoping():
    # B_3(3) = B_3(0) + 3 * (0^2 + 1^2 + 2^2) from B_j(x+1) - B_j(x) = j x^(j-1).
    assert bernoulli_polynomial_eval(3, 3) == bernoulli_number(3) + 3 * (0 + 1 + 4) == 15


@pytest.mark.parametrize("j", range(0, 21))
def test_bernoulli_difference_equation(j):
    for x in range(11):
        diff = bernoulli_polynomial_eval(j, x + 1) - bernoulli_polynomial_eval(j, x)
        assert diff == (j * Fraction(x) ** (j - 1) if j else 0)


@pytest.mark.parametrize("j", range(0, 21))
def test_bernoulli_polynomial_structure(j):
    coeffs = bernoulli_polynomial(j)
    assert coeffs[-1] == 1
    assert bernoulli_polynomial_eval(j, 0) == bernoulli_number(j)


@pytest.mark.parametrize(
    "s,k,expected",
    [(2, (1, 1), 1), (3, (1, 1), 0), (2, (2, 1, 1), 5)],
)
def test_elementary_symmetric_examples(s, k, expected):
    assert elementary_symmetric(s, k) == expected


@pytest.mark.parametrize(
    "s,k,expected",
    [(4, (1, 1), 2), (0, (2, 3), 2), (4, (2, 1), 17)],
)
def test_power_sum_examples(s, k, expected):
    assert power_sum(s, k) == expected


@given(st.lists(st.integers(0, 20), min_size=1, max_size=7))
def test_newton_identity_e2(k):
    p1, p2 = power_sum(1, k), power_sum(2, k)
    assert 2 * elementary_symmetric(2, k) == p1 * p1 - p2


@given(st.lists(st.integers(0, 9), min_size=1, max_size=6), st.integers(0, 7))
def test_elementary_symmetric_matches_subset_products(k, s):
    brute = 0
    for idx in combinations(range(len(k)), s):
        prod = 1
        for i in idx:
            prod *= k[i]
        brute += prod
    assert elementary_symmetric(s, k) == brute

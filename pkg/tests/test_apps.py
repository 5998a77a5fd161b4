from fractions import Fraction

import pytest

from galois_lab.apps import (
    code_count_asymptotics,
    code_numerator,
    demazure_basic_specialization,
    demazure_character,
    demazure_character_r2,
    demazure_d,
    demazure_gamma_moments,
    gamma_mean_by_shift,
    prime_power,
)
from galois_lab.permstat import perm_stats
from galois_lab.qcombi import galois_number
from galois_lab.qpoly import QPolynomial
from galois_lab.stats import cumulants, distribution_from_polynomial, galois_mean_var_formula
from galois_lab.verify import WORKED_EXAMPLE_CHARACTER


def test_prime_power():
    assert prime_power(2) == (2, 1)
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    for bad in (1, 6, 12, 0):
        with pytest.raises(ValueError):
            prime_power(bad)


def test_code_examples():
    c = code_count_asymptotics(2, 2)
    assert c.numerator == QPolynomial([3, 1])
    assert c.permutation_estimate == Fraction(5, 2)
    c4 = code_count_asymptotics(2, 4)
    assert c4.a == 2
    assert c4.semilinear_estimate == Fraction(7, 2 * 3 * 2)
    with pytest.raises(ValueError):
        code_count_asymptotics(3, 6)


@pytest.mark.parametrize("n", range(1, 10))
def test_code_numerator_is_galois(n):
    assert code_numerator(n) == galois_number(n, 2)


def test_code_json_labels_estimates():
    data = code_count_asymptotics(3, 3).to_json()
    assert set(data["asymptotic_estimate"]) == {"permutation", "monomial", "semilinear_monomial"}


def test_demazure_d_examples():
    assert demazure_d(4, 2) == (0, 4)
    assert demazure_d(0, 5) == (0, 0)
    assert demazure_d(5, 3) == (2, 8)
    assert demazure_d(3, 2) == (1, 2)


def test_demazure_d_integral_and_bounds():
    for r in range(2, 13):
        for N in range(61):
            i, d = demazure_d(N, r)
            assert i == N % r
            # degree shift dominates the top degree of G so Gamma >= 0
            assert d >= galois_number(N, r).degree if N <= 12 else d >= 0


def test_specialization_examples():
    s = demazure_basic_specialization(4, 2)
    assert s.polynomial == galois_number(4, 2)
    marginal = {}
    for (_, l), m in WORKED_EXAMPLE_CHARACTER.items():
        marginal[l] = marginal.get(l, 0) + m
    assert s.basic_specialization() == marginal == {0: 1, 1: 3, 2: 4, 3: 3, 4: 5}
    assert demazure_basic_specialization(1, 6).polynomial == 6
    s32 = demazure_basic_specialization(3, 2)
    assert (s32.i, s32.d, s32.polynomial) == (1, 2, QPolynomial([4, 2, 2]))


def test_worked_example():
    assert demazure_character_r2(4) == WORKED_EXAMPLE_CHARACTER
    assert demazure_d(4, 2)[1] == 4


def brute_character(N, r):
    # Words with letter counts k and inversion count j land on z^k e^{-(d - j) delta}.
    from itertools import product

    _, d = demazure_d(N, r)
    out = {}
    for w in product(range(r), repeat=N):
        k = tuple(w.count(a) for a in range(r))
        inv = sum(1 for i in range(N) for j in range(i + 1, N) if w[i] > w[j])
        key = (k, d - inv)
        out[key] = out.get(key, 0) + 1
    return out


@pytest.mark.parametrize("N,r", [(3, 2), (4, 3), (5, 2), (3, 4)])
def test_character_matches_word_oracle(N, r):
    assert demazure_character(N, r) == brute_character(N, r)


def test_gamma_example():
    assert demazure_gamma_moments(4, 2)[0] == Fraction(5, 2) == gamma_mean_by_shift(4, 2)
    assert demazure_gamma_moments(1, 4) == (0, 0)


@pytest.mark.parametrize("r", range(2, 6))
def test_gamma_moments(r):
    for N in range(21):
        mean, var = demazure_gamma_moments(N, r)
        _, d = demazure_d(N, r)
        assert var == galois_mean_var_formula(N, r)[1]
        assert mean == d - Fraction((r - 1) * N * (N - 1), 4 * r)
        assert mean == gamma_mean_by_shift(N, r)


@pytest.mark.parametrize("N,r", [(5, 2), (6, 3), (7, 4)])
def test_gamma_distribution_directly(N, r):
    # Gamma = d - G in distribution: build the reflected law and compare.
    _, d = demazure_d(N, r)
    g = galois_number(N, r)
    reflected = QPolynomial([g[d - l] if 0 <= d - l < len(g) else 0 for l in range(d + 1)])
    k = cumulants(distribution_from_polynomial(reflected), 2)
    assert tuple(k) == demazure_gamma_moments(N, r)

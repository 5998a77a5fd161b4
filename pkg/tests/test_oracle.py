from itertools import permutations

import pytest

from galois_lab.oracle import CapExceeded, character_chi, count_flags, enumerate_subspaces, is_prime, rref
from galois_lab.qcombi import galois_number, q_binomial
from galois_lab.qpoly import poly_eval


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_rref_canonical():
    assert rref([[2, 4], [1, 1]], 5) == ((1, 0), (0, 1))
    assert rref([[1, 1], [2, 2]], 3) == ((1, 1),)
    assert rref([[0, 0]], 2) == ()


def test_subspace_examples():
    assert len(enumerate_subspaces(2, 2)) == 5
    assert len(enumerate_subspaces(3, 0)) == 1
    assert len(enumerate_subspaces(2, 3)) == 16


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("N", range(0, 6))
def test_subspace_counts_by_dimension(q, N):
    spaces = enumerate_subspaces(q, N)
    keys = [s.basis for s in spaces]
    assert len(set(keys)) == len(keys)
    for k in range(N + 1):
        assert sum(1 for s in spaces if s.dim == k) == poly_eval(q_binomial(N, k), q)
    assert len({s.vectors() for s in spaces}) == len(spaces)


def test_flag_examples():
    assert count_flags(2, 2, 2) == 5 == poly_eval(galois_number(2, 2), 2)
    assert count_flags(3, 3, 1) == 1
    assert count_flags(2, 3, 3) == poly_eval(galois_number(3, 3), 2)


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("N", range(0, 5))
def test_flags_match_galois(q, N):
    for r in range(1, 5):
        assert count_flags(q, N, r) == poly_eval(galois_number(N, r), q)


def test_chi_examples():
    assert character_chi(2, 2, (1, 2)) == 5
    assert character_chi(2, 2, (2, 1)) == 3


def cycle_type(p):
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen:
            continue
        n, j = 0, i
        while j not in seen:
            seen.add(j)
            j = p[j] - 1
            n += 1
        out.append(n)
    return tuple(sorted(out))


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("N", range(1, 5))
def test_chi_class_function(q, N):
    by_type = {}
    for tau in permutations(range(1, N + 1)):
        by_type.setdefault(cycle_type(tau), set()).add(character_chi(q, N, tau))
    assert all(len(v) == 1 for v in by_type.values())
    assert by_type[(1,) * N] == {poly_eval(galois_number(N, 2), q)}


def test_chi_transposition_trend():
    ratios = []
    for N in range(2, 6):
        tau = (2, 1) + tuple(range(3, N + 1))
        ratios.append(character_chi(2, N, tau) / poly_eval(galois_number(N, 2), 2))
    assert all(b < a for a, b in zip(ratios, ratios[1:]))


def test_errors():
    with pytest.raises(ValueError):
        enumerate_subspaces(4, 2)
    with pytest.raises(CapExceeded):
        enumerate_subspaces(2, 10, cap=2**8)
    with pytest.raises(ValueError):
        character_chi(2, 3, (1, 1, 2))
    with pytest.raises(ValueError):
        count_flags(2, 2, 0)

"""Brute-force linear algebra over F_q (q prime): subspaces in reduced
row-echelon form, flag counts and the permutation character on subspaces.
Deliberately independent of the polynomial machinery it is used to check."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence

__all__ = [
    "CapExceeded",
    "Subspace",
    "character_chi",
    "count_flags",
    "enumerate_subspaces",
    "is_prime",
    "rref",
]

DEFAULT_VECTOR_CAP = 2**18


class CapExceeded(ValueError):
    pass


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def _check(q: int, N: int, cap: int) -> None:
    if not is_prime(q):
        raise ValueError("q must be prime, got %d" % q)
    if N < 0:
        raise ValueError("N must be nonnegative")
    if q**N > cap:
        raise CapExceeded("q^N = %d exceeds the vector cap %d" % (q**N, cap))


def rref(rows: Sequence[Sequence[int]], q: int) -> tuple[tuple[int, ...], ...]:
    """Reduced row-echelon form over F_q with zero rows dropped."""
    m = [[x % q for x in row] for row in rows]
    if not m:
        return ()
    ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        pr = next((i for i in range(pivot_row, len(m)) if m[i][col]), None)
        if pr is None:
            continue
        m[pivot_row], m[pr] = m[pr], m[pivot_row]
        inv = pow(m[pivot_row][col], q - 2, q)
        m[pivot_row] = [x * inv % q for x in m[pivot_row]]
        for i in range(len(m)):
            if i != pivot_row and m[i][col]:
                f = m[i][col]
                m[i] = [(x - f * y) % q for x, y in zip(m[i], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return tuple(tuple(row) for row in m[:pivot_row])


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_q^N identified by its canonical RREF basis."""

    q: int
    N: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> frozenset[tuple[int, ...]]:
        return _span(self.q, self.N, self.basis)


@lru_cache(maxsize=None)
def _span(q: int, N: int, basis: tuple[tuple[int, ...], ...]) -> frozenset[tuple[int, ...]]:
    out = set()
    for coeffs in product(range(q), repeat=len(basis)):
        v = [0] * N
        for c, b in zip(coeffs, basis):
            if c:
                for i in range(N):
                    v[i] += c * b[i]
        out.add(tuple(x % q for x in v))
    return frozenset(out)


def _rref_of_dim(q: int, N: int, k: int):
    # Every k-dim subspace has exactly one RREF: choose pivot columns, then
    # fill the entries right of each pivot that are not in pivot columns.
    for pivots in combinations(range(N), k):
        free = [(i, c) for i, p in enumerate(pivots) for c in range(p + 1, N) if c not in pivots]
        for values in product(range(q), repeat=len(free)):
            rows = [[0] * N for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, c), v in zip(free, values):
                rows[i][c] = v
            yield tuple(tuple(row) for row in rows)


def enumerate_subspaces(q: int, N: int, cap: int = DEFAULT_VECTOR_CAP) -> list[Subspace]:
    """All subspaces of F_q^N, grouped by dimension, each exactly once."""
    _check(q, N, cap)
    return [Subspace(q, N, basis) for k in range(N + 1) for basis in _rref_of_dim(q, N, k)]


def _contained(small: Subspace, big: Subspace) -> bool:
    if small.dim > big.dim:
        return False
    vs = big.vectors()
    return all(b in vs for b in small.basis)


def count_flags(q: int, N: int, r: int, cap: int = DEFAULT_VECTOR_CAP) -> int:
    """Chains 0 = V_0 <= V_1 <= ... <= V_r = F_q^N, repetitions allowed.

    chains[m][V] counts chains of length m from 0 ending at V; each step
    sums over all subspaces contained in V.
    """
    if r < 1:
        raise ValueError("r must be positive")
    spaces = enumerate_subspaces(q, N, cap)
    below = [[i for i, u in enumerate(spaces) if _contained(u, v)] for v in spaces]
    chains = [1 if v.dim == 0 else 0 for v in spaces]
    for _ in range(r):
        chains = [sum(chains[i] for i in below[idx]) for idx in range(len(spaces))]
    full = next(i for i, v in enumerate(spaces) if v.dim == N)
    return chains[full]


def character_chi(q: int, N: int, tau: Sequence[int], cap: int = DEFAULT_VECTOR_CAP) -> int:
    """Number of subspaces V of F_q^N with tau(V) = V, where tau permutes
    coordinates: (tau v)_{tau(i)} = v_i, tau given in one-line notation on 1..N."""
    tau = tuple(tau)
    if sorted(tau) != list(range(1, N + 1)):
        raise ValueError("tau must be a permutation of 1..%d" % N)
    count = 0
    for v in enumerate_subspaces(q, N, cap):
        vs = v.vectors()
        fixed = True
        for b in v.basis:
            image = [0] * N
            for i, x in enumerate(b):
                image[tau[i] - 1] = x
            if tuple(image) not in vs:
                fixed = False
                break
        count += fixed
    return count

"""q-factorials, Gaussian binomials and multinomials, Rogers-Szego
expansions, generalized Galois numbers and the partition counts behind
the inversion-statistic formula for Galois numbers."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from .qpoly import QPolynomial

__all__ = [
    "ExpansionTooLarge",
    "RogersSzegoExpansion",
    "compositions",
    "default_max_cells",
    "galois_number",
    "galois_number_by_definition",
    "galois_number_sequence",
    "partition_count",
    "partition_count_with_forced_sizes",
    "partitions_in_box",
    "q_binomial",
    "q_factorial",
    "q_multinomial",
    "restricted_binomial",
    "rogers_szego",
]

MAX_CELLS_ENV = "GALOIS_LAB_MAX_CELLS"
DEFAULT_MAX_CELLS = 10**7


class ExpansionTooLarge(MemoryError):
    pass


def default_max_cells() -> int:
    raw = os.environ.get(MAX_CELLS_ENV)
    if raw is None:
        return DEFAULT_MAX_CELLS
    value = int(raw)
    if value <= 0:
        raise ValueError("%s must be positive" % MAX_CELLS_ENV)
    return value


def restricted_binomial(a: int, b: int) -> int:
    """C(a, b), defined as 0 unless 0 <= b <= a (also for negative a)."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@lru_cache(maxsize=None)
def q_factorial(k: int) -> QPolynomial:
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return QPolynomial.constant(1)
    return q_factorial(k - 1) * QPolynomial.q_integer(k)


@lru_cache(maxsize=None)
def _gauss_row(n: int) -> tuple[QPolynomial, ...]:
    # [n; k]_q for k = 0..n via [n;k] = [n-1;k-1] + q^k [n-1;k].
    if n == 0:
        return (QPolynomial.constant(1),)
    prev = _gauss_row(n - 1)
    row = [QPolynomial.constant(1)]
    for k in range(1, n):
        row.append(prev[k - 1] + prev[k].shift(k))
    row.append(QPolynomial.constant(1))
    return tuple(row)


def q_binomial(n: int, k: int) -> QPolynomial:
    if n < 0 or k < 0 or k > n:
        return QPolynomial()
    return _gauss_row(n)[k]


def q_multinomial(N: int, k: Sequence[int]) -> QPolynomial:
    """[N; k]_q, or 0 when the parts do not sum to N."""
    if any(x < 0 for x in k) or sum(k) != N:
        return QPolynomial()
    out = QPolynomial.constant(1)
    partial = 0
    for x in k:
        partial += x
        if x:
            out = out * q_binomial(partial, x)
    return out


def compositions(N: int, r: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of N into r parts, lexicographically descending
    from (N, 0, ..., 0)."""
    if r < 1:
        raise ValueError("r must be positive")
    if r == 1:
        yield (N,)
        return
    for first in range(N, -1, -1):
        for rest in compositions(N - first, r - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class RogersSzegoExpansion:
    """Coefficient of z^k in H_N^(r)(z, q) for every composition k."""

    N: int
    r: int
    coefficients: dict[tuple[int, ...], QPolynomial]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, k: tuple[int, ...]) -> QPolynomial:
        return self.coefficients.get(tuple(k), QPolynomial())

    def at_z_one(self) -> QPolynomial:
        total = QPolynomial()
        for p in self.coefficients.values():
            total = total + p
        return total

    def laurent_r2(self) -> dict[int, QPolynomial]:
        """For r = 2, the specialization z = (z, 1/z) keyed by z-exponent."""
        if self.r != 2:
            raise ValueError("Laurent specialization is defined for r = 2")
        out: dict[int, QPolynomial] = {}
        for (a, b), p in self.coefficients.items():
            out[a - b] = out.get(a - b, QPolynomial()) + p
        return dict(sorted(out.items(), reverse=True))

    def to_json(self) -> dict:
        rows = [
            {"composition": list(k), "coefficients": p.to_json()}
            for k, p in sorted(self.coefficients.items())
        ]
        return {"N": self.N, "r": self.r, "terms": rows}


def rogers_szego(N: int, r: int, max_cells: int | None = None) -> RogersSzegoExpansion:
    if N < 0 or r < 1:
        raise ValueError("need N >= 0 and r >= 1")
    cap = default_max_cells() if max_cells is None else max_cells
    size = comb(N + r - 1, r - 1)
    if size > cap:
        raise ExpansionTooLarge(
            "Rogers-Szego expansion (N=%d, r=%d) has %d terms, cap is %d" % (N, r, size, cap)
        )
    coeffs = {k: q_multinomial(N, k) for k in compositions(N, r)}
    return RogersSzegoExpansion(N, r, dict(sorted(coeffs.items())))


@lru_cache(maxsize=None)
def _galois_level(n_max: int, r: int) -> tuple[QPolynomial, ...]:
    # G_n^(r) for all n <= n_max.
    if r == 1:
        return (QPolynomial.constant(1),) * (n_max + 1)
    level = tuple(_sum_polys(_gauss_row(n)) for n in range(n_max + 1))
    for rr in range(3, r + 1):
        level = tuple(_galois_top(n, rr, level) for n in range(n_max + 1))
    return level


def _sum_polys(polys) -> QPolynomial:
    width = max(len(p) for p in polys)
    acc = [0] * width
    for p in polys:
        for i, c in enumerate(p.coeffs):
            acc[i] += c
    return QPolynomial(acc)


def _galois_top(N: int, r: int, lower: Sequence[QPolynomial]) -> QPolynomial:
    # Flags factor through V_{r-1}: G_N^(r) = sum_k [N; k] G_k^(r-1).
    row = _gauss_row(N)
    return _sum_polys([row[k] * lower[k] for k in range(N + 1)])


def galois_number(N: int, r: int) -> QPolynomial:
    """G_N^(r)(q), the number of weakly increasing length-r flags in F_q^N."""
    if N < 0 or r < 1:
        raise ValueError("need N >= 0 and r >= 1")
    if r <= 2:
        return _galois_level(N, r)[N]
    return _galois_top(N, r, _galois_level(N, r - 1))


def galois_number_sequence(N: int, r_max: int) -> list[QPolynomial]:
    """[G_N^(1), ..., G_N^(r_max)] from one pass of the level recursion."""
    if N < 0 or r_max < 1:
        raise ValueError("need N >= 0 and r_max >= 1")
    out = [QPolynomial.constant(1)]
    level = (QPolynomial.constant(1),) * (N + 1)
    for r in range(2, r_max + 1):
        level = tuple(_galois_top(n, r, level) for n in range(N + 1))
        out.append(level[N])
    return out[:r_max]


def galois_number_by_definition(N: int, r: int) -> QPolynomial:
    """Sum of [N; k]_q over all compositions; exponential in r."""
    return _sum_polys([q_multinomial(N, k) for k in compositions(N, r)])


def partitions_in_box(N: int, r: int) -> Iterator[tuple[int, ...]]:
    """Partitions with at most r parts, each at most N (zeros dropped)."""

    def rec(max_part: int, slots: int):
        yield ()
        if slots == 0:
            return
        for first in range(max_part, 0, -1):
            for rest in rec(first, slots - 1):
                yield (first,) + rest

    yield from rec(N, r)


def partition_count(N: int, r: int) -> int:
    return restricted_binomial(N + r, N)


def partition_count_with_forced_sizes(N: int, r: int, T) -> int:
    T = set(T)
    if any(not 1 <= s <= N for s in T):
        raise ValueError("forced sizes must lie in 1..N")
    return restricted_binomial(N + r - len(T), N)


def composition_from_descents(N: int, S) -> tuple[int, ...]:
    """(s1, s2 - s1, ..., N - s_j) for S = {s1 < ... < s_j}."""
    cuts = [0] + sorted(S) + [N]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def subsets(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    for size in range(len(items) + 1):
        yield from combinations(items, size)

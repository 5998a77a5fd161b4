"""Inversions and descents of permutations, descent classes, and the
formulas expressing Galois numbers through the (des, inv) statistic."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from . import kernels
from .qcombi import (
    composition_from_descents,
    galois_number,
    galois_number_sequence,
    q_binomial,
    q_factorial,
    q_multinomial,
    restricted_binomial,
)
from .qpoly import QPolynomial, QSeries, QTPolynomial

__all__ = [
    "DescentInvTable",
    "PermRecord",
    "StanleyReport",
    "deformed_galois",
    "descent_class_inv_poly",
    "descent_inv_table",
    "galois_via_macmahon",
    "mahonian_limit_gap",
    "mahonian_limit_gaps",
    "perm_stats",
    "q_exponential_shifted",
    "stanley_identity_check",
    "stanley_identity_check_cleared",
]

ENUMERATION_THRESHOLD = 11
TABLE_CAP = 16


@dataclass(frozen=True)
class PermRecord:
    perm: tuple[int, ...]
    inv: int
    descent_set: frozenset[int]

    @property
    def des(self) -> int:
        return len(self.descent_set)


def perm_stats(pi: Sequence[int]) -> PermRecord:
    p = tuple(int(x) for x in pi)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError("not a permutation of 1..%d: %r" % (len(p), p))
    n = len(p)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
    descents = frozenset(i + 1 for i in range(n - 1) if p[i] > p[i + 1])
    return PermRecord(p, inv, descents)


def descent_class_inv_poly(N: int, T: Iterable[int]) -> QPolynomial:
    """sum of q^inv over permutations with descent set exactly T, by
    inclusion-exclusion over the q-multinomials of subsets of T."""
    T = sorted(set(T))
    if any(not 1 <= s < N for s in T):
        raise ValueError("descent positions must lie in 1..N-1")
    out = QPolynomial()
    size = len(T)
    for mask in range(1 << size):
        S = [T[i] for i in range(size) if mask >> i & 1]
        term = q_multinomial(N, composition_from_descents(N, S))
        out = out + term if (size - len(S)) % 2 == 0 else out - term
    return out


@dataclass(frozen=True)
class DescentInvTable:
    """Row t holds sum_{des(pi)=t} q^inv(pi) over the symmetric group S_N."""

    N: int
    rows: dict[int, QPolynomial]

    def __getitem__(self, t: int) -> QPolynomial:
        return self.rows.get(t, QPolynomial())

    def total(self) -> QPolynomial:
        out = QPolynomial()
        for p in self.rows.values():
            out = out + p
        return out

    def eulerian(self) -> list[int]:
        return [self[t].value_at_one() for t in range(max(self.N, 1))]

    def as_qt(self) -> QTPolynomial:
        return QTPolynomial.from_t_rows(self.rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["N", "t", "exponent", "coefficient"])
        for t, p in self.rows.items():
            for e, c in enumerate(p.coeffs):
                if c:
                    writer.writerow([self.N, t, e, c])
        return buf.getvalue()


def _rows_from_counts(counts: list[list[int]]) -> dict[int, QPolynomial]:
    rows = {}
    for t, row in enumerate(counts):
        p = QPolynomial(row)
        if p:
            rows[t] = p
    return rows


def _coset_counts(args: tuple[int, int]) -> list[list[int]]:
    N, first = args
    start = [first] + [x for x in range(1, N + 1) if x != first]
    return kernels.descent_inv_counts(start, 1)


def _enumerate_counts(N: int, workers: int = 1) -> list[list[int]]:
    if N <= 1 or workers <= 1:
        return kernels.descent_inv_counts(list(range(1, N + 1)))
    jobs = [(N, first) for first in range(1, N + 1)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_coset_counts, jobs))
    # Merging is elementwise addition, so the result is order independent.
    return [[sum(col) for col in zip(*rows)] for rows in zip(*parts)]


def _inclusion_exclusion_rows(N: int) -> dict[int, QPolynomial]:
    # beta(S) = [N; comp(S)] for every S in {1..N-1}, then Moebius inversion
    # over the subset lattice gives the class polynomial of each S.
    m = max(N - 1, 0)
    polys = [q_multinomial(N, composition_from_descents(N, [i + 1 for i in range(m) if mask >> i & 1])) for mask in range(1 << m)]
    for bit in range(m):
        step = 1 << bit
        for mask in range(1 << m):
            if mask & step:
                polys[mask] = polys[mask] - polys[mask ^ step]
    acc: dict[int, QPolynomial] = {}
    for mask, p in enumerate(polys):
        if p:
            t = bin(mask).count("1")
            acc[t] = acc.get(t, QPolynomial()) + p
    return dict(sorted(acc.items()))


def descent_inv_table(N: int, method: str = "auto", workers: int = 1) -> DescentInvTable:
    """(des, inv) generating table of S_N.

    ``method`` is ``"enumerate"`` (brute force via the kernel),
    ``"inclusion_exclusion"``, or ``"auto"`` (enumeration up to
    ``ENUMERATION_THRESHOLD``).
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    if N > TABLE_CAP:
        raise ValueError("N=%d exceeds the descent table cap %d" % (N, TABLE_CAP))
    if method == "auto":
        method = "enumerate" if N <= ENUMERATION_THRESHOLD else "inclusion_exclusion"
    if method == "enumerate":
        if N > ENUMERATION_THRESHOLD + 1:
            raise ValueError("enumeration is capped at N=%d" % (ENUMERATION_THRESHOLD + 1))
        rows = _rows_from_counts(_enumerate_counts(N, workers))
    elif method == "inclusion_exclusion":
        rows = _inclusion_exclusion_rows(N)
    else:
        raise ValueError("unknown method %r" % method)
    return DescentInvTable(N, rows)


def galois_via_macmahon(N: int, r: int, table: DescentInvTable | None = None) -> QPolynomial:
    """sum over S_N of C(N+r-1-des, N) q^inv."""
    if r < 2:
        raise ValueError("r must be at least 2")
    table = table or descent_inv_table(N)
    out = QPolynomial()
    for t, p in table.rows.items():
        w = restricted_binomial(N + r - 1 - t, N)
        if w:
            out = out + p * w
    return out


def mahonian_limit_gap(N: int, r: int) -> Fraction:
    """Largest coefficient gap between N!/r^N * G_N^(r)(q) and [N]_q!."""
    if N < 1 or r < 2:
        raise ValueError("need N >= 1 and r >= 2")
    return _gap(N, r, galois_number(N, r))


def _gap(N: int, r: int, g: QPolynomial) -> Fraction:
    target = q_factorial(N)
    scale = Fraction(factorial(N), r**N)
    width = max(len(g), len(target))
    return max(abs(scale * g[e] - target[e]) for e in range(width))


def mahonian_limit_gaps(N: int, r_values: Sequence[int]) -> list[Fraction]:
    """mahonian_limit_gap(N, r) for each r, sharing one pass over r."""
    if N < 1 or any(r < 2 for r in r_values):
        raise ValueError("need N >= 1 and r >= 2")
    seq = galois_number_sequence(N, max(r_values))
    return [_gap(N, r, seq[r - 1]) for r in r_values]


def deformed_galois(N: int, r: int, table: DescentInvTable | None = None) -> QTPolynomial:
    """sum over S_N of C(N+r-1-des, N) t^des q^inv."""
    if r < 2:
        raise ValueError("r must be at least 2")
    table = table or descent_inv_table(N)
    weighted = {}
    for t, p in table.rows.items():
        w = restricted_binomial(N + r - 1 - t, N)
        if w:
            weighted[t] = p * w
    return QTPolynomial.from_t_rows(weighted)


def q_exponential_shifted(order: int) -> QSeries:
    """Exp_q(u(t-1)) as a q-divided series: coefficient n is q^C(n,2) (t-1)^n."""
    t_minus_1 = QTPolynomial({(0, 1): 1, (0, 0): -1})
    coeffs = [QTPolynomial({(n * (n - 1) // 2, 0): 1}) * t_minus_1**n for n in range(order + 1)]
    return QSeries(coeffs, order, divided=True)


@dataclass(frozen=True)
class StanleyReport:
    order: int
    per_order: tuple[bool, ...]
    lhs: tuple[QTPolynomial, ...]
    rhs: tuple[QTPolynomial, ...]

    @property
    def passed(self) -> bool:
        return all(self.per_order)


def stanley_identity_check(order: int) -> StanleyReport:
    """Compare both sides of

        sum_N sum_pi t^des q^inv u^N/[N]_q! = (1 - t)/(Exp_q(u(t-1)) - t)

    up to u^order. Both sides are held in the q-divided basis, which is the
    same as multiplying the u^N coefficient by [N]_q!, so everything stays
    in Z[q, t].

    The right side is 1/(1 - F) with F = sum_{n>=1} q^C(n,2) (t-1)^(n-1)
    u^n/[n]_q!, since Exp_q(u(t-1)) - t = (1 - t)(1 - F).
    """
    if order > ENUMERATION_THRESHOLD:
        raise ValueError("order exceeds the enumeration cap %d" % ENUMERATION_THRESHOLD)
    lhs = [descent_inv_table(n, method="enumerate").as_qt() for n in range(order + 1)]
    t_minus_1 = QTPolynomial({(0, 1): 1, (0, 0): -1})
    denominator = [QTPolynomial({(0, 0): 1})]
    for n in range(1, order + 1):
        denominator.append(-(QTPolynomial({(n * (n - 1) // 2, 0): 1}) * t_minus_1 ** (n - 1)))
    rhs = QSeries(denominator, order, divided=True).inverse()
    rhs_coeffs = tuple(QTPolynomial._coerce(c) for c in rhs.coeffs)
    flags = tuple(a == b for a, b in zip(lhs, rhs_coeffs))
    return StanleyReport(order, flags, tuple(lhs), rhs_coeffs)


def stanley_identity_check_cleared(order: int) -> list[bool]:
    """Second route: multiply the left side by the denominator and check
    that only 1 - t survives, i.e. for N >= 1

        (1 - t) A_N + sum_{k=1}^{N} [N; k]_q q^C(k,2) (t-1)^k A_{N-k} = 0.
    """
    tables = [descent_inv_table(n, method="enumerate").as_qt() for n in range(order + 1)]
    exp_series = q_exponential_shifted(order)
    out = []
    one_minus_t = QTPolynomial({(0, 0): 1, (0, 1): -1})
    for n in range(order + 1):
        acc = one_minus_t * tables[n]
        for k in range(1, n + 1):
            acc = acc + q_binomial(n, k) * exp_series[k] * tables[n - k]
        expected = one_minus_t if n == 0 else QTPolynomial()
        out.append(acc == expected)
    return out

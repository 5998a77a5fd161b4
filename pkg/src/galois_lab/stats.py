"""Exact moments and cumulants of coefficient distributions, closed-form
mean/variance/cumulant formulas for q-multinomials and Galois numbers,
and normality diagnostics."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, isqrt
from typing import Callable, Sequence

import mpmath

from .exact import (
    bernoulli_number,
    bernoulli_polynomial_eval,
    elementary_symmetric,
    elementary_symmetric_all,
)
from .qcombi import compositions, galois_number, q_multinomial, rogers_szego
from .qpoly import QPolynomial

__all__ = [
    "CoeffDistribution",
    "CumulantOrderRow",
    "NormalityReport",
    "central_composition",
    "cumulant_order_check",
    "cumulants",
    "cumulants_from_moments",
    "distribution_from_polynomial",
    "galois_mean_var_formula",
    "inv_factorial_cumulant",
    "moments",
    "moments_from_cumulants",
    "multinomial_weighted_sum_direct",
    "multinomial_weighted_sums",
    "normal_cdf",
    "normality_report",
    "perturbed_composition",
    "qmultinomial_cumulant_formula",
    "qmultinomial_mean_var_formula",
    "rogers_szego_covariance",
]


@dataclass(frozen=True)
class CoeffDistribution:
    """Law of X with P(X = j) = coeff_j / p(1) for a nonnegative polynomial p."""

    weights: tuple[int, ...]
    total: int

    @property
    def masses(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(w, self.total) for w in self.weights)

    @property
    def support_max(self) -> int:
        return len(self.weights) - 1

    def power_sums(self, J: int) -> list[int]:
        # sum_j w_j j^a for a = 0..J, in integers.
        sums = [0] * (J + 1)
        for j, w in enumerate(self.weights):
            if w:
                x = w
                for a in range(J + 1):
                    sums[a] += x
                    x *= j
        return sums


def distribution_from_polynomial(p: QPolynomial) -> CoeffDistribution:
    if not p:
        raise ValueError("zero polynomial has no coefficient distribution")
    if any(c < 0 for c in p.coeffs):
        raise ValueError("negative coefficient in %s" % p)
    return CoeffDistribution(tuple(p.coeffs), sum(p.coeffs))


def moments(d: CoeffDistribution, J: int) -> list[Fraction]:
    """Raw moments E[X^a] for a = 1..J."""
    if J < 1:
        raise ValueError("J must be positive")
    sums = d.power_sums(J)
    return [Fraction(s, d.total) for s in sums[1:]]


def cumulants_from_moments(m: Sequence[Fraction]) -> list[Fraction]:
    # kappa_n = m_n - sum_{k=1}^{n-1} C(n-1, k-1) kappa_k m_{n-k}
    raw = [Fraction(1)] + [Fraction(x) for x in m]
    kappa = [Fraction(0)]
    for n in range(1, len(raw)):
        acc = raw[n]
        for k in range(1, n):
            acc -= comb(n - 1, k - 1) * kappa[k] * raw[n - k]
        kappa.append(acc)
    return kappa[1:]


def _integer_partitions(n: int, largest: int | None = None):
    if largest is None:
        largest = n
    if n == 0:
        yield []
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _integer_partitions(n - part, part):
            yield [part] + rest


def moments_from_cumulants(kappa: Sequence[Fraction]) -> list[Fraction]:
    """Raw moments from cumulants through the sum over partitions of alpha:

    E[X^alpha] = sum prod_i (kappa_i/i!)^{m_i} alpha!/prod_i m_i!
    where m_i is the multiplicity of part i.
    """
    out = []
    for alpha in range(1, len(kappa) + 1):
        total = Fraction(0)
        for parts in _integer_partitions(alpha):
            mult: dict[int, int] = {}
            for p in parts:
                mult[p] = mult.get(p, 0) + 1
            term = Fraction(factorial(alpha))
            for i, m_i in mult.items():
                term *= (Fraction(kappa[i - 1]) / factorial(i)) ** m_i / factorial(m_i)
            total += term
        out.append(total)
    return out


def cumulants(d: CoeffDistribution, J: int) -> list[Fraction]:
    """Cumulants kappa_1..kappa_J, computed from shifted moments so that
    the integer arithmetic stays small."""
    if J < 1:
        raise ValueError("J must be positive")
    # Cumulants of order >= 2 are shift invariant; center at an integer.
    shift = (sum(j * w for j, w in enumerate(d.weights)) // d.total) if d.total else 0
    sums = [0] * (J + 1)
    for j, w in enumerate(d.weights):
        if w:
            x = w
            y = j - shift
            for a in range(J + 1):
                sums[a] += x
                x *= y
    kappa = cumulants_from_moments([Fraction(s, d.total) for s in sums[1:]])
    kappa[0] += shift
    return kappa


def qmultinomial_mean_var_formula(k: Sequence[int]) -> tuple[Fraction, Fraction]:
    e = elementary_symmetric_all(k) + [0, 0, 0]
    return Fraction(e[2], 2), Fraction((e[1] + 1) * e[2] - e[3], 12)


def galois_mean_var_formula(N: int, r: int) -> tuple[Fraction, Fraction]:
    if N < 0 or r < 1:
        raise ValueError("need N >= 0 and r >= 1")
    mean = Fraction((r - 1) * N * (N - 1), 4 * r)
    var = Fraction((r - 1) * (r + 1) * N * (N - 1) * (2 * N + 5), 72 * r * r)
    return mean, var


def multinomial_weighted_sums(N: int, r: int, s) -> int:
    """Closed forms for sum_k C(N; k) e_s(k) (s = 1..4 or any s >= 0),
    sum_k C(N; k) e_2(k)^2 (s = "e2sq") and sum_k C(N; k) p_4(k) (s = "p4")."""
    if s == "e2sq":
        value = Fraction(r**N * (N * N * (r - 1) ** 2 - N * (r - 1) ** 2 + 2 * (r - 1)) * N * (N - 1), 4 * r * r)
        if value.denominator != 1:
            raise ArithmeticError("e2sq closed form is not integral at N=%d, r=%d" % (N, r))
        return value.numerator
    if s == "p4":
        total = N * r**N
        for c, m in ((14, 2), (36, 3), (24, 4)):
            if m <= N:
                total += Fraction(c * comb(N, m) * r**N, r ** (m - 1))
        return int(total)
    s = int(s)
    if s < 0:
        raise ValueError("s must be nonnegative")
    if s > N or s > r:
        return 0
    return factorial(s) * comb(N, s) * comb(r, s) * r ** (N - s)


def multinomial_weighted_sum_direct(N: int, r: int, weight: Callable[[tuple[int, ...]], int]) -> int:
    total = 0
    for k in compositions(N, r):
        coeff = factorial(N)
        for x in k:
            coeff //= factorial(x)
        total += coeff * weight(k)
    return total


def inv_factorial_cumulant(k: int, j: int) -> Fraction:
    """j-th cumulant of the inversion count of a uniform permutation of k."""
    if j == 1:
        return Fraction(k * (k - 1), 4)
    bj = bernoulli_number(j)
    return bj / j * (bernoulli_polynomial_eval(j + 1, k + 1) / (j + 1) - k)


def qmultinomial_cumulant_formula(k: Sequence[int], j: int, N: int | None = None) -> Fraction:
    """Exact j-th cumulant of the coefficient distribution of [N; k]_q."""
    if j < 1:
        raise ValueError("j must be positive")
    total = sum(k)
    if N is None:
        N = total
    if total != N:
        raise ValueError("composition %r does not sum to N=%d" % (tuple(k), N))
    if j == 1:
        return Fraction(N * (N - 1), 4) - sum(Fraction(x * (x - 1), 4) for x in k)
    bj = bernoulli_number(j)
    if bj == 0:
        return Fraction(0)
    inner = bernoulli_polynomial_eval(j + 1, N + 1) - sum(bernoulli_polynomial_eval(j + 1, x + 1) for x in k)
    return bj / (j * (j + 1)) * inner


def central_composition(N: int, r: int) -> tuple[int, ...]:
    """Parts floor(N/r) and ceil(N/r), larger parts last."""
    base, extra = divmod(N, r)
    return (base,) * (r - extra) + (base + 1,) * extra


def perturbed_composition(N: int, r: int) -> tuple[int, ...]:
    """Central composition with floor(sqrt(N)) units moved into the first
    part, taken from the other parts as evenly as possible."""
    k = list(central_composition(N, r))
    if r == 1:
        return tuple(k)
    shift = isqrt(N)
    i = r - 1
    moved = 0
    while moved < shift and any(k[1:]):
        if k[i] > 0:
            k[i] -= 1
            moved += 1
        i = i - 1 if i > 1 else r - 1
    k[0] += moved
    return tuple(k)


@dataclass(frozen=True)
class CumulantOrderRow:
    N: int
    composition: tuple[int, ...]
    j: int
    kappa: Fraction
    scaled: Fraction
    limit: Fraction | None
    rel_error: float | None


def cumulant_order_check(
    r: int,
    j: int,
    N_list: Sequence[int],
    schedule: str = "central",
    tolerance: float | None = None,
) -> dict:
    """Table of kappa_j / N^(j+1) along a composition schedule.

    For j = 1 the reference is the limit of kappa_1/N^2 = (r-1)/(4r) and
    for j = 2 that of kappa_2/N^3 = (r^2-1)/(36 r^2). ``converging`` says
    whether the relative error is nonincreasing along N_list and, when
    ``tolerance`` is set, ends below it.
    """
    make = {"central": central_composition, "perturbed": perturbed_composition}[schedule]
    limit = {1: Fraction(r - 1, 4 * r), 2: Fraction(r * r - 1, 36 * r * r)}.get(j)
    if j >= 3 and j % 2 == 1:
        limit = Fraction(0)
    rows = []
    for N in N_list:
        k = make(N, r)
        kappa = qmultinomial_cumulant_formula(k, j)
        # Even cumulants are O(N^(j+1)); kappa_1 is O(N^2).
        power = 2 if j == 1 else j + 1
        scaled = kappa / Fraction(N) ** power if N else Fraction(0)
        err = None
        if limit is not None:
            err = float(abs(scaled - limit) / limit) if limit else float(abs(scaled))
        rows.append(CumulantOrderRow(N, k, j, kappa, scaled, limit, err))
    errors = [row.rel_error for row in rows if row.rel_error is not None]
    converging = all(b <= a for a, b in zip(errors, errors[1:]))
    if tolerance is not None and errors:
        converging = converging and errors[-1] <= tolerance
    return {"r": r, "j": j, "schedule": schedule, "rows": rows, "converging": converging}


def normal_cdf(x, dps: int = 30):
    """Standard normal CDF via erfc at ``dps`` significant digits."""
    with mpmath.workdps(dps):
        x = mpmath.mpf(x)
        return mpmath.erfc(-x / mpmath.sqrt(2)) / 2


def _precision_digits(cdf_precision: Fraction | float) -> int:
    p = Fraction(cdf_precision)
    if not 0 < p < 1:
        raise ValueError("cdf_precision must lie in (0, 1)")
    digits = 0
    while Fraction(1, 10**digits) > p:
        digits += 1
    return digits + 10


@dataclass(frozen=True)
class NormalityReport:
    N: int
    r: int
    mean: Fraction
    variance: Fraction
    skewness_sq_signed: Fraction
    excess_kurtosis: Fraction
    kolmogorov_distance: float
    cdf_precision: float

    def kolmogorov_text(self) -> str:
        return "%.12f" % self.kolmogorov_distance

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "r": self.r,
            "mean": _frac_str(self.mean),
            "variance": _frac_str(self.variance),
            "skewness_sq_signed": _frac_str(self.skewness_sq_signed),
            "excess_kurtosis": _frac_str(self.excess_kurtosis),
            "kolmogorov_distance": self.kolmogorov_text(),
            "cdf_precision": self.cdf_precision,
        }


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def kolmogorov_distance(d: CoeffDistribution, mean: Fraction, variance: Fraction, dps: int = 30):
    """sup_x |F(x) - Phi((x - mean)/sd)| for the lattice law d.

    The supremum is attained at a support point, comparing Phi with both
    the left limit and the value of the step function there.
    """
    with mpmath.workdps(dps):
        sd = mpmath.sqrt(mpmath.mpf(variance.numerator) / variance.denominator)
        mu = mpmath.mpf(mean.numerator) / mean.denominator
        total = mpmath.mpf(d.total)
        below = 0
        worst = mpmath.mpf(0)
        for j, w in enumerate(d.weights):
            if not w:
                continue
            phi = normal_cdf((j - mu) / sd, dps)
            left = below / total
            below += w
            right = below / total
            worst = max(worst, abs(phi - left), abs(right - phi))
        return worst


def normality_report(N: int, r: int, cdf_precision: float = 1e-12) -> NormalityReport:
    if N < 2:
        raise ValueError("variance is degenerate for N < 2")
    d = distribution_from_polynomial(galois_number(N, r))
    kappa = cumulants(d, 4)
    mean, var = kappa[0], kappa[1]
    skew_sq = kappa[2] ** 2 / var**3
    if kappa[2] < 0:
        skew_sq = -skew_sq
    ex_kurt = kappa[3] / var**2
    dps = _precision_digits(cdf_precision)
    dist = kolmogorov_distance(d, mean, var, dps)
    return NormalityReport(N, r, mean, var, skew_sq, ex_kurt, float(dist), float(cdf_precision))


def rogers_szego_covariance(N: int, r: int, max_cells: int | None = None) -> list[list[Fraction]]:
    """Covariance matrix of (X_1, ..., X_r; Y) where
    P(X = k, Y = j) = coeff_j([N; k]_q) / r^N."""
    expansion = rogers_szego(N, r, max_cells)
    total = r**N
    size = r + 1
    first = [0] * size
    second = [[0] * size for _ in range(size)]
    for k, p in expansion.coefficients.items():
        for j, c in enumerate(p.coeffs):
            if not c:
                continue
            vec = list(k) + [j]
            for a in range(size):
                first[a] += c * vec[a]
                row = second[a]
                ca = c * vec[a]
                for b in range(size):
                    row[b] += ca * vec[b]
    return [
        [Fraction(second[a][b], total) - Fraction(first[a], total) * Fraction(first[b], total) for b in range(size)]
        for a in range(size)
    ]

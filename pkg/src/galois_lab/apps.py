"""Linear code count asymptotics and basic specializations of affine
Demazure characters, both expressed through Galois numbers."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .oracle import is_prime
from .permstat import descent_inv_table
from .qcombi import galois_number, restricted_binomial, rogers_szego
from .qpoly import QPolynomial, poly_eval
from .stats import galois_mean_var_formula

__all__ = [
    "CodeCountAsymptotics",
    "DemazureSpecialization",
    "code_count_asymptotics",
    "code_numerator",
    "demazure_basic_specialization",
    "demazure_character",
    "demazure_character_r2",
    "demazure_d",
    "demazure_gamma_moments",
    "gamma_mean_by_shift",
    "prime_power",
]


def prime_power(q: int) -> tuple[int, int]:
    """(p, a) with q = p^a, or ValueError if q is not a prime power."""
    if q < 2:
        raise ValueError("%d is not a prime power" % q)
    p = next(d for d in range(2, q + 1) if q % d == 0)
    if not is_prime(p):
        raise ValueError("%d is not a prime power" % q)
    a, rest = 0, q
    while rest % p == 0:
        rest //= p
        a += 1
    if rest != 1:
        raise ValueError("%d is not a prime power" % q)
    return p, a


def code_numerator(n: int) -> QPolynomial:
    """sum over permutations with at most one descent of C(n+1-des, n) q^inv."""
    table = descent_inv_table(n)
    out = QPolynomial()
    for t in (0, 1):
        w = restricted_binomial(n + 1 - t, n)
        if w:
            out = out + table[t] * w
    return out


@dataclass(frozen=True)
class CodeCountAsymptotics:
    """Asymptotic estimates (n -> infinity) for linear q-ary codes of length n
    up to permutation, monomial and semi-linear monomial equivalence.
    These are leading-order estimates, not exact class counts."""

    n: int
    q: int
    p: int
    a: int
    numerator: QPolynomial
    permutation_estimate: Fraction
    monomial_estimate: Fraction
    semilinear_estimate: Fraction

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "p": self.p,
            "a": self.a,
            "numerator": self.numerator.to_json(),
            "asymptotic_estimate": {
                "permutation": str(self.permutation_estimate),
                "monomial": str(self.monomial_estimate),
                "semilinear_monomial": str(self.semilinear_estimate),
            },
        }


def code_count_asymptotics(n: int, q: int) -> CodeCountAsymptotics:
    p, a = prime_power(q)
    if n < 1:
        raise ValueError("n must be positive")
    num = code_numerator(n)
    value = poly_eval(num, q)
    s = Fraction(value, factorial(n))
    m = s / (q - 1) ** (n - 1)
    return CodeCountAsymptotics(n, q, p, a, num, s, m, m / a)


def demazure_d(N: int, r: int) -> tuple[int, int]:
    """(i, d_r(N)) with i = N mod r and
    d_r(N) = N(N-1)/2 - (N-i)(N+i-r)/(2r)."""
    if r < 2 or N < 0:
        raise ValueError("need r >= 2 and N >= 0")
    i = N % r
    d = Fraction(N * (N - 1), 2) - Fraction((N - i) * (N + i - r), 2 * r)
    if d.denominator != 1:
        raise ArithmeticError("d_%d(%d) = %s is not an integer" % (r, N, d))
    return i, d.numerator


@dataclass(frozen=True)
class DemazureSpecialization:
    N: int
    r: int
    i: int
    d: int
    polynomial: QPolynomial
    # (z-exponent vector, degree l) -> multiplicity of z^k e^{Lambda_0 - l delta}
    character: dict = field(default_factory=dict, compare=False)

    def basic_specialization(self) -> dict[int, int]:
        """Multiplicity of e^{Lambda_0 - l delta} for each degree l."""
        return {self.d - j: c for j, c in enumerate(self.polynomial.coeffs) if c}

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "r": self.r,
            "i": self.i,
            "d": self.d,
            "polynomial": self.polynomial.to_json(),
            "basic_specialization": {str(l): c for l, c in sorted(self.basic_specialization().items())},
        }


def demazure_character(N: int, r: int, max_cells: int | None = None) -> dict[tuple[tuple[int, ...], int], int]:
    """e^{-Lambda_0} char V_{-N omega_1}(Lambda_0) as a map
    (k, l) -> multiplicity of z^k e^{-l delta}, with q = e^delta and
    the Rogers-Szego coefficient q^j landing in degree l = d_r(N) - j."""
    _, d = demazure_d(N, r)
    out = {}
    for k, p in rogers_szego(N, r, max_cells).coefficients.items():
        for j, c in enumerate(p.coeffs):
            if c:
                out[(k, d - j)] = c
    return out


def demazure_character_r2(N: int) -> dict[tuple[int, int], int]:
    """r = 2 character with z = (z, 1/z): (z-exponent, degree l) -> multiplicity."""
    out: dict[tuple[int, int], int] = {}
    for (k, l), c in demazure_character(N, 2).items():
        key = (k[0] - k[1], l)
        out[key] = out.get(key, 0) + c
    return out


def demazure_basic_specialization(N: int, r: int, with_character: bool = False) -> DemazureSpecialization:
    i, d = demazure_d(N, r)
    poly = galois_number(N, r)
    char = demazure_character(N, r) if with_character else {}
    return DemazureSpecialization(N, r, i, d, poly, char)


def demazure_gamma_moments(N: int, r: int) -> tuple[Fraction, Fraction]:
    """Mean and variance of the degree statistic Gamma_{N,r}."""
    i, _ = demazure_d(N, r)
    mean = Fraction((r + 1) * N * (N - 1) - 2 * (N - i) * (N + i - r), 4 * r)
    var = Fraction((r - 1) * (r + 1) * N * (N - 1) * (2 * N + 5), 72 * r * r)
    return mean, var


def gamma_mean_by_shift(N: int, r: int) -> Fraction:
    """d_r(N) - E[G_{N,r}], the mean of Gamma read as a downward degree."""
    _, d = demazure_d(N, r)
    return d - galois_mean_var_formula(N, r)[0]

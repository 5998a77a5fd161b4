"""Exact polynomials in q (dense), in q and t (sparse), and truncated
power series in an auxiliary variable u."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "QPolynomial",
    "QTPolynomial",
    "QSeries",
    "SeriesNotInvertible",
    "poly_add",
    "poly_mul",
    "poly_eval",
    "poly_derivative",
    "series_mul",
    "series_inverse",
]

# Below this many coefficient pairs schoolbook convolution beats packing.
_KRONECKER_MIN_WORK = 2048


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def _schoolbook(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, y in enumerate(b):
        if y:
            for i, x in enumerate(a, j):
                out[i] += x * y
    return out


def _pack(coeffs: Sequence[int], digits: int) -> int:
    # Nonnegative coefficients only; each occupies `digits` hex digits.
    fmt = "0%dx" % digits
    return int("".join(format(c, fmt) for c in reversed(coeffs)), 16)


def _unpack(value: int, digits: int, length: int) -> list[int]:
    s = format(value, "x")
    s = s.rjust(digits * length, "0")
    total = len(s)
    return [int(s[total - (i + 1) * digits : total - i * digits] or "0", 16) for i in range(length)]


def _kronecker_nonneg(a: Sequence[int], b: Sequence[int]) -> list[int]:
    bound = max(a).bit_length() + max(b).bit_length() + min(len(a), len(b)).bit_length() + 1
    digits = (bound + 3) // 4
    length = len(a) + len(b) - 1
    return _unpack(_pack(a, digits) * _pack(b, digits), digits, length)


def _split_signs(c: Sequence[int]) -> tuple[list[int], list[int]]:
    return [x if x > 0 else 0 for x in c], [-x if x < 0 else 0 for x in c]


def _convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    if len(a) * len(b) < _KRONECKER_MIN_WORK or min(len(a), len(b)) < 8:
        return _schoolbook(a, b)
    ap, an = _split_signs(a)
    bp, bn = _split_signs(b)
    length = len(a) + len(b) - 1
    out = [0] * length
    for x, y, sign in ((ap, bp, 1), (an, bn, 1), (ap, bn, -1), (an, bp, -1)):
        if any(x) and any(y):
            for i, c in enumerate(_kronecker_nonneg(x, y)):
                if c:
                    out[i] += sign * c
    return out


class QPolynomial:
    """Dense polynomial in q with integer coefficients, constant term first."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        object.__setattr__(self, "coeffs", _trim(cs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...]) -> "QPolynomial":
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def constant(cls, c: int) -> "QPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> "QPolynomial":
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls([0] * exponent + [c])

    @classmethod
    def q_integer(cls, n: int) -> "QPolynomial":
        """[n]_q = 1 + q + ... + q^(n-1)."""
        return cls._raw((1,) * n)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, exponent: int) -> int:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(("QPolynomial", self.coeffs)))
        return self._hash

    def __repr__(self) -> str:
        return "QPolynomial(%r)" % (list(self.coeffs),)

    def __str__(self) -> str:
        return self.render()

    def render(self, var: str = "q") -> str:
        """Ascending-power text form, e.g. ``3 + 2*q + q^2``."""
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                body = str(abs(c))
            else:
                mono = var if e == 1 else "%s^%d" % (var, e)
                body = mono if abs(c) == 1 else "%d*%s" % (abs(c), mono)
            if not terms:
                terms.append(body if c > 0 else "-" + body)
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms) if terms else "0"

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @staticmethod
    def _coerce(other) -> "QPolynomial | None":
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return QPolynomial._raw(_trim([other]))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return QPolynomial._raw(())
            return QPolynomial._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return QPolynomial._raw(_trim(_convolve(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPolynomial":
        if n < 0:
            raise ValueError("negative power")
        result = QPolynomial._raw((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "QPolynomial":
        """Multiply by q^k (k >= 0)."""
        if not self.coeffs or k == 0:
            return self
        return QPolynomial._raw((0,) * k + self.coeffs)

    def __call__(self, x):
        return poly_eval(self, x)

    def derivative(self, order: int = 1) -> "QPolynomial":
        return poly_derivative(self, order)

    def value_at_one(self) -> int:
        return sum(self.coeffs)


def poly_add(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    return a + b


def poly_mul(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    return a * b


def poly_eval(a: QPolynomial, x):
    """Horner evaluation; exact for int and Fraction arguments."""
    if isinstance(x, float):
        raise TypeError("exact evaluation requires int or Fraction")
    if not isinstance(x, int):
        x = Fraction(x)
    acc = 0
    for c in reversed(a.coeffs):
        acc = acc * x + c
    return acc


def poly_derivative(a: QPolynomial, order: int = 1) -> QPolynomial:
    if order < 0:
        raise ValueError("order must be nonnegative")
    cs = list(a.coeffs)
    for _ in range(order):
        cs = [i * c for i, c in enumerate(cs)][1:]
    return QPolynomial(cs)


class QTPolynomial:
    """Sparse polynomial in q and t, keyed by (q_exponent, t_exponent)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        for (qe, te), c in (terms or {}).items():
            if qe < 0 or te < 0:
                raise ValueError("negative exponent")
            if c:
                clean[(int(qe), int(te))] = int(c)
        self._terms = dict(sorted(clean.items(), key=lambda kv: (kv[0][1], kv[0][0])))

    @classmethod
    def from_q(cls, p: QPolynomial, t_exponent: int = 0) -> "QTPolynomial":
        return cls({(e, t_exponent): c for e, c in enumerate(p.coeffs) if c})

    @classmethod
    def from_t_rows(cls, rows: Mapping[int, QPolynomial]) -> "QTPolynomial":
        terms = {}
        for t, p in rows.items():
            for e, c in enumerate(p.coeffs):
                if c:
                    terms[(e, t)] = c
        return cls(terms)

    @classmethod
    def t(cls) -> "QTPolynomial":
        return cls({(0, 1): 1})

    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._terms.get(key, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        return "QTPolynomial(%r)" % (self._terms,)

    def __str__(self) -> str:
        terms = []
        for (qe, te), c in self._terms.items():
            monos = [v if e == 1 else "%s^%d" % (v, e) for v, e in (("q", qe), ("t", te)) if e]
            body = "*".join(monos)
            if not body:
                body = str(abs(c))
            elif abs(c) != 1:
                body = "%d*%s" % (abs(c), body)
            if not terms:
                terms.append(body if c > 0 else "-" + body)
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms) if terms else "0"

    @staticmethod
    def _coerce(other) -> "QTPolynomial | None":
        if isinstance(other, QTPolynomial):
            return other
        if isinstance(other, QPolynomial):
            return QTPolynomial.from_q(other)
        if isinstance(other, int):
            return QTPolynomial({(0, 0): other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in o._terms.items():
            out[k] = out.get(k, 0) + c
        return QTPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "QTPolynomial":
        return QTPolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (qa, ta), ca in self._terms.items():
            for (qb, tb), cb in o._terms.items():
                key = (qa + qb, ta + tb)
                out[key] = out.get(key, 0) + ca * cb
        return QTPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QTPolynomial":
        result = QTPolynomial({(0, 0): 1})
        for _ in range(n):
            result = result * self
        return result

    def t_rows(self) -> dict[int, QPolynomial]:
        """Coefficient of each power of t, as a polynomial in q."""
        rows: dict[int, list[int]] = {}
        for (qe, te), c in self._terms.items():
            row = rows.setdefault(te, [])
            if len(row) <= qe:
                row.extend([0] * (qe + 1 - len(row)))
            row[qe] = c
        return {t: QPolynomial(row) for t, row in sorted(rows.items())}

    def specialize_t(self, t) -> QPolynomial:
        """Substitute an integer for t."""
        out = QPolynomial()
        for te, row in self.t_rows().items():
            out = out + row * (t**te)
        return out

    def specialize_q(self, q) -> dict[int, object]:
        """Substitute a number for q; returns {t_exponent: value}."""
        return {te: poly_eval(row, q) for te, row in self.t_rows().items()}

    def to_json(self) -> list[list[int]]:
        return [[qe, te, c] for (qe, te), c in self._terms.items()]


class SeriesNotInvertible(ArithmeticError):
    pass


def _is_unit(c) -> bool:
    if isinstance(c, Fraction):
        return c != 0
    if isinstance(c, int):
        return c in (1, -1)
    if isinstance(c, (QPolynomial, QTPolynomial)):
        return c == 1 or c == -1
    return False


def _unit_inverse(c):
    if isinstance(c, Fraction):
        return 1 / c
    if isinstance(c, int):
        return c
    return c  # +-1 is its own inverse


class QSeries:
    """Power series in u truncated after u^order.

    With ``divided=True`` the coefficient list ``a`` stands for
    sum_n a[n] u^n / [n]_q!, and products use the q-binomial convolution;
    this keeps series like Exp_q denominator-free.
    """

    __slots__ = ("order", "coeffs", "divided")

    def __init__(self, coeffs: Sequence, order: int, divided: bool = False):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = list(coeffs[: order + 1])
        cs.extend([0] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)
        self.divided = divided

    def __getitem__(self, n: int):
        return self.coeffs[n] if 0 <= n <= self.order else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.order == other.order
            and self.divided == other.divided
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __repr__(self) -> str:
        return "QSeries(%r, order=%d%s)" % (list(self.coeffs), self.order, ", divided=True" if self.divided else "")

    def __add__(self, other: "QSeries") -> "QSeries":
        _check_compatible(self, other)
        m = min(self.order, other.order)
        return QSeries([self[n] + other[n] for n in range(m + 1)], m, self.divided)

    def __sub__(self, other: "QSeries") -> "QSeries":
        _check_compatible(self, other)
        m = min(self.order, other.order)
        return QSeries([self[n] - other[n] for n in range(m + 1)], m, self.divided)

    def __mul__(self, other: "QSeries") -> "QSeries":
        return series_mul(self, other)

    def inverse(self) -> "QSeries":
        return series_inverse(self)


def _check_compatible(a: QSeries, b: QSeries) -> None:
    if a.divided != b.divided:
        raise ValueError("cannot combine ordinary and q-divided series")


def _binomial_weight(n: int, k: int):
    from .qcombi import q_binomial

    return q_binomial(n, k)


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    _check_compatible(a, b)
    m = min(a.order, b.order)
    out = []
    for n in range(m + 1):
        acc = 0
        for k in range(n + 1):
            term = a[k] * b[n - k]
            if a.divided:
                term = _binomial_weight(n, k) * term
            acc = acc + term
        out.append(acc)
    return QSeries(out, m, a.divided)


def series_inverse(a: QSeries) -> QSeries:
    c0 = a[0]
    if not _is_unit(c0):
        raise SeriesNotInvertible("series not invertible")
    inv0 = _unit_inverse(c0)
    out = [inv0]
    for n in range(1, a.order + 1):
        acc = 0
        for k in range(1, n + 1):
            term = a[k] * out[n - k]
            if a.divided:
                term = _binomial_weight(n, k) * term
            acc = acc + term
        out.append(-(acc * inv0) if not isinstance(inv0, Fraction) else -acc * inv0)
    return QSeries(out, a.order, a.divided)

"""Exact generalized Galois numbers, q-multinomial coefficients and the
moments, cumulants and permutation statistics attached to them."""

from .qpoly import QPolynomial, QTPolynomial, QSeries
from .qcombi import galois_number, q_binomial, q_factorial, q_multinomial, rogers_szego

__version__ = "0.1.0"

__all__ = [
    "QPolynomial",
    "QTPolynomial",
    "QSeries",
    "galois_number",
    "q_binomial",
    "q_factorial",
    "q_multinomial",
    "rogers_szego",
]

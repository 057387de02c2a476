"""Exact arithmetic: rationals, polynomials in n, truncated series, combinatorics."""

from fractions import Fraction

from .combinat import binom_poly, binomial, odd_double_factorial, pochhammer
from .poly import Poly, as_fraction, format_rational, parse_rational
from .series import LaurentSeries, MultiSeries, TruncationError, expand_inverse_difference

Rational = Fraction

__all__ = [
    "Fraction",
    "LaurentSeries",
    "MultiSeries",
    "Poly",
    "Rational",
    "TruncationError",
    "as_fraction",
    "binom_poly",
    "binomial",
    "expand_inverse_difference",
    "format_rational",
    "odd_double_factorial",
    "parse_rational",
    "pochhammer",
]

"""Rising factorials and binomial coefficients with exact or polynomial arguments."""

from __future__ import annotations

from fractions import Fraction
from math import factorial, prod

from .poly import Poly, as_fraction


def pochhammer(a, ell: int):
    """Rising factorial a(a+1)...(a+ell-1).

    Works for ints, Fractions and Poly; the result has the same kind as ``a``.
    """
    if ell < 0:
        raise ValueError(f"Pochhammer length must be nonnegative, got {ell}")
    if isinstance(a, Poly):
        result = Poly.const(1)
        for t in range(ell):
            result = result * (a + t)
        return result
    result = 1 if isinstance(a, int) else Fraction(1)
    for t in range(ell):
        result *= a + t
    return result


def binom_poly(top, k: int) -> Poly:
    """Binomial coefficient C(top, k) as a polynomial in the entries of ``top``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    top = Poly.coerce(top)
    return pochhammer(top - (k - 1), k) / factorial(k)


def binomial(x, k: int):
    """Generalized binomial x(x-1)...(x-k+1)/k! for any rational x; zero for k < 0."""
    if k < 0:
        return 0
    if isinstance(x, int):
        if 0 <= k <= x:
            num = prod(range(x - k + 1, x + 1))
            return num // factorial(k)
        num = prod(x - t for t in range(k))
        return num // factorial(k)
    x = as_fraction(x)
    num = Fraction(1)
    for t in range(k):
        num *= x - t
    return num / factorial(k)


def odd_double_factorial(ell: int) -> int:
    """(2*ell+1)!! = 1*3*5*...*(2*ell+1)."""
    return prod(range(1, 2 * ell + 2, 2))

"""Entries of the l x l resolvent matrix M(lam, n; l) as series in 1/lam.

Every entry of M is a polynomial in n at each power of lam. Writing
M = sum_p A_p lam^(-p), each A_p has exactly one possibly nonzero entry per
row: row i meets column j with j = i + p (mod l).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, factorial

from ..curve import ctilde_as_poly_in_n
from ..exact.combinat import binomial, pochhammer
from ..exact.poly import Poly
from ..exact.series import LaurentSeries

N = Poly.gen()


def _check_indices(l: int, i: int, j: int):
    if l < 2:
        raise ValueError("l must be at least 2")
    if not 1 <= i <= l or not 0 <= j <= l - 1:
        raise ValueError(f"need 1 <= i <= l and 0 <= j <= l-1, got i={i}, j={j}")


@dataclass(frozen=True)
class YEntry:
    """A y-series split into its polynomial part and a multiple of 1/n at lam^0."""

    series: LaurentSeries
    inverse_n: Fraction = Fraction(0)

    def times_n(self) -> LaurentSeries:
        out = self.series * N
        if self.inverse_n:
            out = out + LaurentSeries({0: Poly.const(self.inverse_n)})
        return out


@lru_cache(maxsize=None)
def y_block(l: int, i: int, j: int, m: int) -> tuple[Poly, Fraction]:
    """Coefficient of lam^(i-j-l-lm) in y(lam, n, i, j; l).

    Returns (polynomial part, coefficient of 1/n); the second is nonzero only
    for the empty-product case i = l, j = 0, m = 0, where (n+1)_(-1) = 1/n.
    """
    _check_indices(l, i, j)
    length = l * m + l - 1 - i + j
    if length == -1:
        return Poly(), Fraction(1)
    total = Poly()
    for s in range(m + 1):
        term = pochhammer(N + (1 - j - l * s), length) * binomial(m, s)
        total = total + term if s % 2 == 0 else total - term
    return total / (l**m * factorial(m)), Fraction(0)


def y_entry(l: int, i: int, j: int, order: int) -> YEntry:
    """y(lam, n, i, j; l) with every power lam^e, e >= -order."""
    _check_indices(l, i, j)
    terms = {}
    inv = Fraction(0)
    m = 0
    while i - j - l - l * m >= -order:
        poly, extra = y_block(l, i, j, m)
        e = i - j - l - l * m
        terms[e] = poly
        if extra:
            if e != 0:
                raise AssertionError("1/n part away from lam^0")
            inv = extra
        m += 1
    return YEntry(LaurentSeries(terms, -order), inv)


def y_entry_curve(l: int, i: int, j: int, order: int) -> YEntry:
    """Same series as y_entry, assembled from the curve coefficients Ct_s."""
    _check_indices(l, i, j)
    terms: dict[int, Poly] = {}
    if i == j:
        terms[0] = Poly.const(-1)
    m = max(0, ceil(Fraction(i - j, l - 1)))
    while -(l * m + j - i) >= -order:
        s = (l - 1) * m + j - i
        e = -(l * m + j - i)
        coeff = Fraction(2**m * pochhammer(m, s), 1) / Fraction(2) ** (l * m + j - i)
        if coeff:
            poly = ctilde_as_poly_in_n(l - 1, l - 1 - i, j - 1, s) * coeff
            terms[e] = terms[e] + poly if e in terms else poly
        m += 1
    inv = Fraction(1) if (i == l and j == 0) else Fraction(0)
    return YEntry(LaurentSeries(terms, -order), inv)


@lru_cache(maxsize=None)
def shift_entry(l: int, i: int, p: int) -> tuple[int, Poly] | None:
    """The entry of A_p in row i as (column, polynomial), or None when it vanishes.

    Rows and columns are numbered 1..l.
    """
    if p < 0:
        return None
    j = (i + p - 1) % l + 1
    value = Poly.const(1) if (p == 0 and i == j) else Poly()
    if j < l:
        gap = p - (l - i + j)
        if gap >= 0 and gap % l == 0:
            poly, _ = y_block(l, i, j, gap // l)
            value = value + poly
    else:
        gap = p - (l - i)
        if gap >= 0 and gap % l == 0:
            poly, inv = y_block(l, i, 0, gap // l)
            value = value - (poly * N + inv)
    if value.is_zero():
        return None
    return j, value


@dataclass(frozen=True)
class ResolventMatrix:
    l: int
    order: int
    entries: tuple  # rows of LaurentSeries, 0-based storage of 1-based indices

    def entry(self, i: int, j: int) -> LaurentSeries:
        return self.entries[i - 1][j - 1]

    def coefficient_matrix(self, p: int) -> list[list[Poly]]:
        """A_p as a dense list of rows."""
        return [[self.entries[a][b].coefficient(-p) for b in range(self.l)] for a in range(self.l)]

    def trace(self) -> LaurentSeries:
        total = LaurentSeries({}, -self.order)
        for a in range(self.l):
            total = total + self.entries[a][a]
        return total


def m_matrix(l: int, order: int) -> ResolventMatrix:
    """Assemble M(lam, n; l) through lam^(-order)."""
    if l < 2:
        raise ValueError("l must be at least 2")
    rows = []
    for i in range(1, l + 1):
        row = []
        for j in range(1, l + 1):
            delta = LaurentSeries({0: 1} if i == j else {})
            if j < l:
                row.append(delta + y_entry(l, i, j, order).series)
            else:
                row.append(delta - y_entry(l, i, 0, order).times_n())
        rows.append(tuple(row))
    return ResolventMatrix(l, order, tuple(rows))

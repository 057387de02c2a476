"""Closed formulas for one- and two-point counts and the identities around them."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from ..exact.combinat import binomial, pochhammer
from ..exact.poly import Poly
from ..exact.powerseries import ps_exp, ps_mul, ps_pow
from ..exact.series import LaurentSeries
from ..report import Report
from .points import count_poly, one_point
from .resolvent import y_entry

N = Poly.gen()


def f_func(i, j: int, p, l: int):
    """f(i, j, p; l) = 1/(l^p p!) sum_s (-1)^s C(p,s) (i+1-ls)_(j-1).

    ``i`` may be a number or a Poly. Returns zero when p is negative or not
    an integer, which is how the summation ranges of the two-point formula
    are cut off.
    """
    if j <= 0:
        raise ValueError("f needs j >= 1 (the Pochhammer length j-1 must be nonnegative)")
    p = Fraction(p)
    if p < 0 or p.denominator != 1:
        return Poly() if isinstance(i, Poly) else Fraction(0)
    p = int(p)
    total = Poly() if isinstance(i, Poly) else Fraction(0)
    for s in range(p + 1):
        term = pochhammer(i + (1 - l * s), j - 1) * binomial(p, s)
        total = total + term if s % 2 == 0 else total - term
    return total / (l**p * factorial(p))


def f_func_l2(i: int, j: int, p: int) -> Fraction:
    """Binomial form of f(i, j, p; 2), valid for positive integer j."""
    total = sum(
        2**s * binomial(p, s) * binomial(i + j - 2 * p - 1, s + j - 2 * p - 1)
        for s in range(p + 1)
    )
    return Fraction(factorial(j - 1) * total, 2**p * factorial(p))


def one_point_explicit(l: int, a: int) -> Poly:
    """(a+1) M_1(a+1; n) from f; zero unless l divides a+1."""
    if a < 0:
        raise ValueError("a must be nonnegative")
    if (a + 1) % l:
        return Poly()
    return f_func(N - 1, a + 3, (a + 1) // l, l) / (a + 2)


def two_point_explicit(l: int, a: int, b: int) -> Poly:
    """(a+1)(b+1) M_2(a+1, b+1; n) from the four-fold sum of f-products."""
    if a < 0 or b < 0:
        raise ValueError("a and b must be nonnegative")
    if (a + b + 2) % l:
        return Poly()
    fr = Fraction
    total = Poly()
    for j in range(a + 1):
        w = j + 1
        right = j + b + 2
        if (j - a) % l == 0:
            if a == j:
                # f(n, 0, 0; l) = (n+1)_(-1) = 1/n, absorbed by one factor of n
                left_times_n2 = N
            else:
                left_times_n2 = N * N * f_func(N, a - j, fr(a - j, l), l)
            total = total + left_times_n2 * f_func(N, right, fr(right, l), l) * w
        if a == j:
            # the remaining sums need f(., 0, p) with p < 0, which vanish
            continue
        for i1 in range(1, l):
            if (a - j + i1) % l == 0:
                term = f_func(N, a - j, fr(a - j + i1, l) - 1, l) * f_func(N - i1, right, fr(right - i1, l), l)
                total = total - N * term * w
        for i2 in range(1, l):
            if (a - j - i2) % l == 0:
                term = f_func(N - i2, a - j, fr(a - j - i2, l), l) * f_func(N, right, fr(right + i2, l) - 1, l)
                total = total - N * term * w
        for i1 in range(1, l):
            for i2 in range(1, l):
                if (i1 - i2 + a - j) % l == 0:
                    term = f_func(N - i2, a - j, fr(a - j + i1 - i2, l) - 1, l) * f_func(
                        N - i1, right, fr(right - i1 + i2, l) - 1, l
                    )
                    total = total + term * w
    return total


def genus_closed(l: int, g: int, m: int) -> Fraction:
    """lm * M_{g,1}(lm) from the closed formulas in genus 0..3."""
    if m < 1 or l < 2:
        raise ValueError("need l >= 2 and m >= 1")
    d = l * m
    if g == 0:
        return Fraction(binomial(d + 1, m), d + 1)
    if g == 1:
        return Fraction(d * binomial(d - 1, m) * ((l - 1) * l * m - 2), 24)
    if g == 2:
        poly = 5 * (l - 1) ** 2 * l**2 * m**2 - (2 * l**4 + 20 * l**2 - 22 * l) * m + 24
        return Fraction(pochhammer(d - 2, 3) * binomial(d - 3, m) * poly, 5760)
    if g == 3:
        poly = (
            35 * (l - 1) ** 3 * l**3 * m**3
            - 42 * (l - 1) ** 2 * l**2 * (l**2 + l + 6) * m**2
            + (16 * l**6 + 84 * l**4 + 504 * l**2 - 604 * l) * m
            - 480
        )
        return Fraction(pochhammer(d - 4, 5) * binomial(d - 5, m) * poly, 2903040)
    raise NotImplementedError("closed formulas are available for genus 0 to 3 only")


def top_genus(l: int, m: int) -> Fraction:
    """lm * M_{g,1}(lm) in the top genus g = (l-1)m/2."""
    if ((l - 1) * m) % 2:
        raise ValueError("top genus needs (l-1)m even")
    d = l * m
    sign = 1 if l % 2 else -1
    total = sum(Fraction(sign**s * binomial(m, s), binomial(d, l * s)) for s in range(m + 1))
    return Fraction(factorial(d), l**m * factorial(m) * (d + 1)) * total


def zagier_t_formula(l: int, m: int, g: int) -> Fraction:
    """lm * M_{g,1}(lm) as a coefficient of an explicit series in t."""
    top = 1 - 2 * g + (l - 1) * m
    if top < 0:
        raise ValueError("need 1 - 2g + (l-1)m >= 0")
    size = 2 * g + 1
    # (1 - e^{-lt})/t and (1 - e^{-t})/t have nonzero constant terms
    def one_minus_exp_over_t(c):
        e = ps_exp([0, -c] + [0] * (size + 1), size + 2)
        return [-x for x in e[1 : size + 1]]
    num = ps_pow(one_minus_exp_over_t(l), m, size)
    den = ps_pow(one_minus_exp_over_t(1), -(l * m + 2), size)
    damp = ps_exp([0, -1] + [0] * (size - 2), size)
    series = ps_mul(ps_mul(num, den, size), damp, size)
    return Fraction(factorial(l * m), l**m * factorial(m) * factorial(top)) * series[2 * g]


def zagier_Y_check(l: int, m: int, n_max: int) -> Report:
    """Compare the Y-series generating function with one_point at n = 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    size = n_max
    num = ps_pow([1] + [0] * (l - 1) + [-1], m, size)
    den = ps_pow([1, -1], -(l * m + 2), size)
    series = ps_mul(num, den, size)
    scale = Fraction(factorial(l * m), factorial(m) * l**m)
    coeff = one_point(l, l * m + 1).coefficient(-(l * m + 1))
    rep = Report(f"Y generating function l={l} m={m}")
    for n in range(1, n_max + 1):
        lhs = coeff(n)
        rhs = scale * series[n - 1]
        rep.add(f"n={n}", lhs == rhs, f"{lhs} vs {rhs}")
    return rep


def special_two_point_series(l: int, order: int) -> Report:
    """Compare the two-point series with one face of degree 2 against y-series.

    The left side is the lam_1^(-3) slice of the 2-point series, whose
    coefficients carry the weight 2b, so 2b M_2(2,b;n) sits at lam^(-(b+1)).
    """
    if order < l + 3:
        raise ValueError("order must be at least l+3")
    floor = -(order - 1)
    lam = LaurentSeries({1: 1})
    rhs = (
        lam * y_entry(l, l, 0, order).times_n() * 2
        - y_entry(l, l, l - 1, order).times_n()
        - y_entry(l, 1, 0, order).times_n()
        - lam * 2
    ).truncate(floor)
    rep = Report(f"two-point series with a face of degree 2, l={l}")
    for e in range(floor, (rhs.max_exponent or 0) + 1):
        if e >= -1:
            rep.add(f"lam^{e} cancels", rhs.coefficient(e).is_zero(), str(rhs.coefficient(e)))
    for b in range(1, order - 2):
        lhs = count_poly(l, (2, b)).poly_n * (2 * b)
        got = rhs.coefficient(-(b + 1))
        rep.add(f"b={b}", lhs == got, f"{lhs} vs {got}")
    return rep


def _psi_tail(l: int, order: int, shift: int) -> LaurentSeries:
    """S(nu + shift) where S(nu) = sum_m (nu+1)_(lm) / (l^m m!) lam^(-lm)."""
    nu = N + shift
    terms = {}
    for m in range(order + 1):
        terms[-l * m] = pochhammer(nu + 1, l * m) / (l**m * factorial(m))
    return LaurentSeries(terms, -l * order)


def verify_psiB_wave(l: int, order: int) -> Report:
    """Check (T^(l-1) + x T^(-1)) psi = lam psi for the type-B wave function.

    The variable n plays the role of nu = x/eps with eps = 1. Writing
    psi = Gamma(nu+1) lam^(-nu) S(nu), the shift T^a turns the prefactor
    into (nu+1)_a lam^(-a) for a >= 0, and x T^(-1) turns it into lam.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    floor = 1 - l * order
    lam = LaurentSeries({1: 1})
    raised = _psi_tail(l, order, l - 1) * pochhammer(N + 1, l - 1)
    lhs = raised.shift(-(l - 1)) + lam * _psi_tail(l, order, -1)
    rhs = lam * _psi_tail(l, order, 0)
    lhs, rhs = lhs.truncate(floor), rhs.truncate(floor)
    rep = Report(f"type-B wave equation l={l}")
    for e in range(floor, 2):
        a, b = lhs.coefficient(e), rhs.coefficient(e)
        rep.add(f"lam^{e}", a == b, f"{a} vs {b}")
    return rep

"""Series attached to the two families of algebraic curves.

X(u) is the odd Laurent series solving
    ((X+1)^(r+1) - (X-1)^(r+1)) / (2(r+1)) = u^(-r),
and w(u) = 1 + u + ... is the power series solving
    w^(r+1)/(r(r+1)) - w/r + 1/(r+1) = u^2/2.
From them come the coefficient families C_l(r, j), Ct_s(r, i, j) and the
series f_{r,j}(T), together with checks of the identities they satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact.combinat import binomial, odd_double_factorial, pochhammer
from .exact.poly import Poly, as_fraction, format_rational
from .exact.powerseries import ps_inv, ps_log, ps_mul, ps_pow
from .report import Report


class CurveError(ValueError):
    pass


@dataclass(frozen=True)
class CurveSeries:
    """Truncated series in u: coefficients[i] multiplies u^(start + i)."""

    r: Fraction
    start: int
    coefficients: tuple
    order: int

    def coefficient(self, e: int) -> Fraction:
        if e > self.order:
            raise CurveError(f"u^{e} is beyond the computed order {self.order}")
        i = e - self.start
        if i < 0:
            return Fraction(0)
        return self.coefficients[i]


@dataclass(frozen=True)
class CoeffTable:
    family: str
    args: tuple
    values: tuple

    def __getitem__(self, index):
        return self.values[index]

    def __len__(self):
        return len(self.values)


def _check_r(r):
    r = as_fraction(r)
    if r in (0, -1):
        raise CurveError("r must differ from 0 and -1")
    return r


@lru_cache(maxsize=None)
def _w_tail(r: Fraction, n: int) -> tuple:
    """Coefficients of h with w = 1 + u*h(u), through u^(n-1)."""
    # (1+uh)^(r+1) - 1 - (r+1)uh is divisible by u^2; G(h) = that / (r(r+1)u^2) - 1/2.
    h = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for _ in range(2 * n.bit_length() + 4):
        w = [Fraction(1)] + h + [Fraction(0)]  # 1 + u*h through u^(n+1)
        full = ps_pow(w, r + 1, n + 2)
        for i in range(1, n + 2):
            full[i] -= (r + 1) * w[i]
        g = [full[i + 2] / (r * (r + 1)) for i in range(n)]
        g[0] -= Fraction(1, 2)
        if not any(g):
            return tuple(h)
        pw = ps_pow(w, r, n + 1)
        dg = [pw[i + 1] / r for i in range(n)]
        step = ps_mul(g, ps_inv(dg, n), n)
        h = [a - b for a, b in zip(h, step)]
    raise CurveError("Newton iteration for w did not converge")


def solve_w(r, order: int) -> CurveSeries:
    """Power series w(u) = 1 + u - (r-1)/6 u^2 + ... through u^order."""
    r = _check_r(r)
    if order < 1:
        raise CurveError("order must be at least 1")
    h = _w_tail(r, order)
    return CurveSeries(r, 0, (Fraction(1),) + h[:order], order)


def c_coeffs(r, j, ell_max: int) -> CoeffTable:
    """C_0(r,j) .. C_ell_max(r,j) read off (w^(j+1) - 1)/(j+1), or log w for j = -1."""
    r, j = _check_r(r), as_fraction(j)
    n = ell_max + 2
    w = list(solve_w(r, n - 1).coefficients)
    if j == -1:
        gen = ps_log(w, n)
    else:
        gen = ps_pow(w, j + 1, n)
        gen[0] -= 1
        gen = [x / (j + 1) for x in gen]
    return CoeffTable("C", (r, j), tuple(gen[1 : ell_max + 2]))


@lru_cache(maxsize=None)
def _x_profile(r: int, n: int) -> tuple:
    """W(v) with X = W(u^2)/u, as coefficients of v^0 .. v^(n-1)."""
    terms = [(i, Fraction(binomial(r + 1, 2 * i + 1), r + 1)) for i in range(r // 2 + 1)]
    wv = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for _ in range(2 * n.bit_length() + 4):
        f = [Fraction(0)] * n
        df = [Fraction(0)] * n
        for i, c in terms:
            if i >= n:
                continue
            p = ps_pow(wv, r - 2 * i, n)
            for t in range(n - i):
                f[t + i] += c * p[t]
            if r - 2 * i:
                q = ps_pow(wv, r - 2 * i - 1, n)
                for t in range(n - i):
                    df[t + i] += c * (r - 2 * i) * q[t]
        f[0] -= 1
        if not any(f):
            return tuple(wv)
        step = ps_mul(f, ps_inv(df, n), n)
        wv = [a - b for a, b in zip(wv, step)]
    raise CurveError("Newton iteration for X did not converge")


def _int_r(r) -> int:
    r = as_fraction(r)
    if r.denominator != 1 or r < 1:
        raise CurveError("only integer r >= 1 is supported for X and its coefficients")
    return int(r)


def solve_X(r, order: int) -> CurveSeries:
    """Odd Laurent series X = 1/u - (r-1)/6 u + ... through u^order."""
    r = _int_r(r)
    if order < 1:
        raise CurveError("order must be at least 1")
    n = (order + 1) // 2 + 1
    wv = _x_profile(r, n)
    coeffs = [Fraction(0)] * (order + 2)  # u^-1 .. u^order
    for i, c in enumerate(wv):
        e = 2 * i - 1
        if e <= order:
            coeffs[e + 1] = c
    return CurveSeries(Fraction(r), -1, tuple(coeffs), order)


def ctilde(r, i, j, s_max: int) -> CoeffTable:
    """Ct_0 .. Ct_s_max from -(X+1)^i (X-1)^j dX/du = sum_s Ct_s u^(s-i-j-2)."""
    r = _int_r(r)
    i, j = as_fraction(i), as_fraction(j)
    n = s_max + 1
    wv = _x_profile(r, n // 2 + 1)
    big_w = [Fraction(0)] * n  # W(u^2) as a series in u
    tail = [Fraction(0)] * n  # W - 2 v W'(v), also in u
    for t, c in enumerate(wv):
        if 2 * t < n:
            big_w[2 * t] = c
            tail[2 * t] = c * (1 - 2 * t)
    plus = list(big_w)
    minus = list(big_w)
    if n > 1:
        plus[1] += 1
        minus[1] -= 1
    prod = ps_mul(ps_mul(ps_pow(plus, i, n), ps_pow(minus, j, n), n), tail, n)
    return CoeffTable("Ct", (Fraction(r), i, j), tuple(prod))


@lru_cache(maxsize=None)
def ctilde_as_poly_in_n(r: int, i_shift: int, j_shift: int, s: int) -> Poly:
    """Ct_s(r, n + i_shift, -n + j_shift) as a polynomial in n.

    Sampled at s + 2 integer points; the last one checks the degree bound.
    """
    if s < 0:
        raise CurveError("s must be nonnegative")
    nodes = list(range(s + 2))
    values = [ctilde(r, x + i_shift, -x + j_shift, s)[s] for x in nodes]
    poly = Poly.interpolate(nodes[:-1], values[:-1])
    if poly(nodes[-1]) != values[-1]:
        raise CurveError(f"Ct_{s} is not of degree <= {s} in n; interpolation check failed")
    return poly


def f_series(r, j, t_max: int) -> list[Fraction]:
    """Coefficients of f_{r,j}(T) = sum (2l+1)!! C_2l(r,j) (-T)^l through T^t_max."""
    table = c_coeffs(r, j, 2 * t_max)
    return [odd_double_factorial(ell) * table[2 * ell] * (-1) ** ell for ell in range(t_max + 1)]


def verify_f_identities(r, j, t_max: int, f=None) -> Report:
    """Check the two shift identities of f_{r,j} coefficient by coefficient.

    ``f`` may replace f_series (same signature minus r) to inject a faulty series.
    """
    r, j = _check_r(r), as_fraction(j)
    if f is None:
        def f(jj, tt):
            return f_series(r, jj, tt)
    rep = Report(f"f identities r={format_rational(r)} j={format_rational(j)}")
    base = f(j, t_max)
    up = f(j + 1, t_max)
    far = f(j + r, t_max)
    down = f(j - 1, t_max)
    for ell in range(t_max + 1):
        prev = base[ell - 1] if ell else 0
        rhs = base[ell] + ((r - 1) / 2 - j) * prev + (r + 1) * (ell - 1) * prev
        rep.add(f"raise j, T^{ell}", up[ell] == rhs, f"{up[ell]} vs {rhs}")
    for ell in range(t_max + 1):
        rhs = base[ell] - (r * j * down[ell - 1] if ell else 0)
        rep.add(f"raise j by r, T^{ell}", far[ell] == rhs, f"{far[ell]} vs {rhs}")
    return rep


def verify_ffTmT(r, i, j, s_max: int) -> Report:
    """Check f_{r,i}(T) f_{r,j}(-T) = sum_s (1+(s-i-j-1)/r)_s Ct_s(r,i,j) (rT/2)^s."""
    r = Fraction(_int_r(r))
    i, j = as_fraction(i), as_fraction(j)
    fi = f_series(r, i, s_max)
    fj = [c * (-1) ** t for t, c in enumerate(f_series(r, j, s_max))]
    lhs = ps_mul(fi, fj, s_max + 1)
    ct = ctilde(r, i, j, s_max)
    rep = Report(f"f product r={r} i={format_rational(i)} j={format_rational(j)}")
    for s in range(s_max + 1):
        rhs = pochhammer(1 + (s - i - j - 1) / r, s) * ct[s] * (r / 2) ** s
        rep.add(f"T^{s}", lhs[s] == rhs, f"{lhs[s]} vs {rhs}")
    return rep


def verify_ctilde_shifts(r: int, span: int = 4, s_max: int = 8) -> Report:
    """Check the two difference identities of Ct_s in (i, j) on a square grid."""
    r = _int_r(r)
    rep = Report(f"Ct shift identities r={r}")
    cache = {}

    def ct(i, j):
        if (i, j) not in cache:
            cache[(i, j)] = ctilde(r, i, j, s_max)
        return cache[(i, j)]

    for i in range(-span, span + 1):
        for j in range(-span, span + 1):
            for s in range(1, s_max + 1):
                lhs1 = ct(i + 1, j)[s] - ct(i, j + 1)[s]
                rhs1 = 2 * ct(i, j)[s - 1]
                rep.add(f"unit shift i={i} j={j} s={s}", lhs1 == rhs1)
                lhs2 = ct(i + r + 1, j)[s] - ct(i, j + r + 1)[s]
                rhs2 = 2 * (r + 1) * ct(i, j)[s - 1]
                rep.add(f"shift by r+1 i={i} j={j} s={s}", lhs2 == rhs2)
    return rep


def tcfin_rhs(l: int, y, s: int, m: int) -> Fraction:
    total = sum(
        (-1) ** (m - t) * binomial(m, t) * binomial(as_fraction(y) + l * t, s + m)
        for t in range(m + 1)
    )
    return Fraction(2**s, l**m) * total


def verify_tcfin(l: int, s_max: int = 6, m_max: int = 6, ys=range(-3, 7)) -> Report:
    """Check Ct_s(l-1, y, -y+s-(l-1)m-1) against its closed binomial form."""
    rep = Report(f"Ct closed form l={l}")
    for y in ys:
        for m in range(m_max + 1):
            for s in range(s_max + 1):
                lhs = ctilde(l - 1, y, -y + s - (l - 1) * m - 1, s)[s]
                rhs = tcfin_rhs(l, y, s, m)
                rep.add(f"y={y} m={m} s={s}", lhs == rhs, f"{lhs} vs {rhs}")
    return rep


def verify_curve_equations(r, order: int = 12) -> Report:
    """Substitute w (any admissible r) and X (integer r) back into their equations."""
    r = _check_r(r)
    rep = Report(f"curve equations r={format_rational(r)}")
    n = order + 1
    w = list(solve_w(r, order).coefficients)
    lhs = ps_pow(w, r + 1, n)
    lhs = [a / (r * (r + 1)) - b / r for a, b in zip(lhs, w)]
    lhs[0] += 1 / (r + 1)
    for e in range(n):
        want = Fraction(1, 2) if e == 2 else Fraction(0)
        rep.add(f"w equation u^{e}", lhs[e] == want, f"{lhs[e]} vs {want}")
    if r.denominator != 1 or r < 1:
        return rep
    x = solve_X(r, order)
    for e in range(0, order + 1, 2):
        rep.add(f"X has no u^{e} term", x.coefficient(e) == 0, str(x.coefficient(e)))
    # with X = W/u the equation reads ((W+u)^(r+1) - (W-u)^(r+1)) / (2(r+1)) = u
    big_w = [x.coefficient(e - 1) for e in range(n)]
    plus, minus = list(big_w), list(big_w)
    plus[1] += 1
    minus[1] -= 1
    rr = int(r)
    diff = [(a - b) / (2 * (rr + 1)) for a, b in zip(ps_pow(plus, rr + 1, n), ps_pow(minus, rr + 1, n))]
    for e in range(n):
        want = Fraction(1) if e == 1 else Fraction(0)
        rep.add(f"X equation u^{e - rr - 1}", diff[e] == want, f"{diff[e]} vs {want}")
    return rep

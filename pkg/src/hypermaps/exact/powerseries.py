"""Helpers for formal power series stored as lists of Fractions (index = power)."""

from __future__ import annotations

from fractions import Fraction


def _pad(a, n):
    a = [Fraction(x) for x in a[:n]]
    return a + [Fraction(0)] * (n - len(a))


def ps_mul(a, b, n: int) -> list[Fraction]:
    out = [Fraction(0)] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j in range(min(len(b), n - i)):
                if b[j]:
                    out[i + j] += x * b[j]
    return out


def ps_inv(a, n: int) -> list[Fraction]:
    """Reciprocal of a series with nonzero constant term."""
    a = _pad(a, n)
    if a[0] == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    out = [Fraction(0)] * n
    out[0] = 1 / a[0]
    for k in range(1, n):
        acc = sum((a[i] * out[k - i] for i in range(1, k + 1)), Fraction(0))
        out[k] = -acc / a[0]
    return out


def ps_pow(a, alpha, n: int) -> list[Fraction]:
    """a**alpha for a series with constant term 1 (any rational alpha).

    Uses the recurrence obtained from a * (a^alpha)' = alpha * a' * a^alpha.
    Integer alpha also allows any nonzero constant term.
    """
    a = _pad(a, n)
    alpha = Fraction(alpha)
    if a[0] == 0:
        raise ZeroDivisionError("series power needs a nonzero constant term")
    if a[0] != 1:
        if alpha.denominator != 1:
            raise ValueError("fractional power needs constant term 1")
        c = a[0]
        scaled = [x / c for x in a]
        return [x * c ** int(alpha) for x in ps_pow(scaled, alpha, n)]
    out = [Fraction(0)] * n
    out[0] = Fraction(1)
    for k in range(1, n):
        acc = Fraction(0)
        for i in range(1, k + 1):
            if a[i]:
                acc += (alpha * i - (k - i)) * a[i] * out[k - i]
        out[k] = acc / k
    return out


def ps_log(a, n: int) -> list[Fraction]:
    """log of a series with constant term 1."""
    a = _pad(a, n)
    if a[0] != 1:
        raise ValueError("log needs constant term 1")
    deriv = [a[i] * i for i in range(1, n)] + [Fraction(0)]
    quot = ps_mul(deriv, ps_inv(a, n), n)
    return [Fraction(0)] + [quot[i - 1] / i for i in range(1, n)]


def ps_exp(a, n: int) -> list[Fraction]:
    """exp of a series with zero constant term."""
    a = _pad(a, n)
    if a[0] != 0:
        raise ValueError("exp needs zero constant term")
    out = [Fraction(0)] * n
    out[0] = Fraction(1)
    for k in range(1, n):
        acc = sum((i * a[i] * out[k - i] for i in range(1, k + 1)), Fraction(0))
        out[k] = acc / k
    return out


def ps_deriv(a) -> list[Fraction]:
    return [Fraction(x) * i for i, x in enumerate(a)][1:]

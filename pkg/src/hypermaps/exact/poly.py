"""Dense univariate polynomials in the formal variable n over the rationals."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def format_rational(q) -> str:
    """Serialize a rational as "p/q", or "p" when the denominator is 1."""
    q = as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


class Poly:
    """Immutable polynomial stored as coefficients, lowest degree first.

    Trailing zeros are trimmed, so the zero polynomial has no coefficients.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def const(cls, value) -> "Poly":
        return cls((value,))

    @classmethod
    def gen(cls) -> "Poly":
        """The polynomial n."""
        return cls((0, 1))

    @classmethod
    def monomial(cls, coeff, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls([0] * exponent + [coeff])

    @staticmethod
    def coerce(x) -> "Poly":
        return x if isinstance(x, Poly) else Poly.const(x)

    @property
    def coeffs(self) -> list[Fraction]:
        return list(self._c)

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, exponent: int) -> Fraction:
        if 0 <= exponent < len(self._c):
            return self._c[exponent]
        return Fraction(0)

    def terms(self) -> list[tuple[int, Fraction]]:
        """Nonzero (exponent, coefficient) pairs in increasing exponent order."""
        return [(e, c) for e, c in enumerate(self._c) if c]

    def __add__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        other = Poly.coerce(other)
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-x for x in self._c)

    def __sub__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        return Poly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(x * other for x in self._c)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if other.degree != 0:
                raise TypeError("only division by a nonzero constant is supported")
            other = other._c[0]
        other = as_fraction(other)
        if other == 0:
            raise ZeroDivisionError("polynomial division by zero")
        return Poly(x / other for x in self._c)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = Poly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        """Evaluate at a rational, or compose with another polynomial."""
        if isinstance(x, Poly):
            acc = Poly()
            for c in reversed(self._c):
                acc = acc * x + c
            return acc
        x = as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def shift(self, offset) -> "Poly":
        """Return p(n + offset)."""
        return self(Poly((offset, 1)))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Poly.const(other)._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __bool__(self):
        return bool(self._c)

    def format(self, var: str = "n") -> str:
        if not self._c:
            return "0"
        parts = []
        for e in range(len(self._c) - 1, -1, -1):
            c = self._c[e]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = format_rational(mag)
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if mag == 1 else f"{format_rational(mag)}*{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Poly({self.format()!r})"

    def to_json(self) -> list[str]:
        """Coefficient array, lowest degree first, rationals as strings."""
        return [format_rational(c) for c in self._c]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Poly":
        return cls(parse_rational(x) for x in data)

    @classmethod
    def interpolate(cls, xs: Sequence, ys: Sequence) -> "Poly":
        """Unique polynomial of degree < len(xs) through the points (Newton form)."""
        if len(xs) != len(ys):
            raise ValueError("xs and ys differ in length")
        xs = [as_fraction(x) for x in xs]
        if len(set(xs)) != len(xs):
            raise ValueError("interpolation nodes must be distinct")
        table = [as_fraction(y) for y in ys]
        m = len(xs)
        newton = []
        for level in range(m):
            newton.append(table[0])
            table = [
                (table[i + 1] - table[i]) / (xs[i + level + 1] - xs[i])
                for i in range(m - level - 1)
            ]
        result = Poly()
        for k in range(m - 1, -1, -1):
            result = result * Poly((-xs[k], 1)) + newton[k]
        return result

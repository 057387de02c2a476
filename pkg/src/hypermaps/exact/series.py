"""Truncated Laurent series with polynomial coefficients.

A series stores finitely many terms and a truncation floor per variable.
Every coefficient at or above the floor is known exactly; asking for one
below it raises TruncationError instead of returning a silent zero.
A floor of None means the variable is not truncated at all.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .poly import Poly


class TruncationError(LookupError):
    """A coefficient was requested below the truncation floor."""


def _max_floor(*floors):
    known = [f for f in floors if f is not None]
    return max(known) if known else None


class LaurentSeries:
    """Series in one variable lam, infinite towards negative powers.

    ``floor`` is the lowest exponent whose coefficient is known;
    None marks an exact finite expansion.
    """

    __slots__ = ("_terms", "_floor")

    def __init__(self, terms: Mapping[int, object] | None = None, floor: int | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            c = Poly.coerce(c)
            if c and (floor is None or e >= floor):
                clean[int(e)] = c
        self._terms = clean
        self._floor = floor

    @property
    def floor(self) -> int | None:
        return self._floor

    truncation_floor = floor

    @property
    def min_exponent(self) -> int | None:
        """Lowest exponent carrying a nonzero stored coefficient."""
        return min(self._terms) if self._terms else None

    @property
    def max_exponent(self) -> int | None:
        return max(self._terms) if self._terms else None

    def exponents(self) -> list[int]:
        return sorted(self._terms)

    def items(self) -> list[tuple[int, Poly]]:
        return sorted(self._terms.items())

    def coefficient(self, e: int) -> Poly:
        if self._floor is not None and e < self._floor:
            raise TruncationError(f"exponent {e} is below the truncation floor {self._floor}")
        return self._terms.get(e, Poly())

    def _upper(self):
        """Upper bound for exponents of all terms, stored or truncated away."""
        cands = list(self._terms)
        if self._floor is not None:
            cands.append(self._floor - 1)
        return max(cands) if cands else None

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries({0: other})
        floor = _max_floor(self._floor, other._floor)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out[e] + c if e in out else c
        return LaurentSeries(out, floor)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries({e: -c for e, c in self._terms.items()}, self._floor)

    def __sub__(self, other):
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries({0: other})
        return self + (-other)

    def __rsub__(self, other):
        return LaurentSeries({0: other}) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            c = Poly.coerce(other)
            return LaurentSeries({e: v * c for e, v in self._terms.items()}, self._floor)
        cands = []
        if self._floor is not None:
            up = other._upper()
            if up is not None:
                cands.append(self._floor + up)
        if other._floor is not None:
            up = self._upper()
            if up is not None:
                cands.append(other._floor + up)
        floor = max(cands) if cands else None
        if floor is None and (self._floor is not None or other._floor is not None):
            # a truncated zero times anything is still only known above its floor
            floor = _max_floor(self._floor, other._floor)
        out: dict[int, Poly] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                if floor is not None and e < floor:
                    continue
                v = c1 * c2
                out[e] = out[e] + v if e in out else v
        return LaurentSeries(out, floor)

    __rmul__ = __mul__

    def shift(self, s: int) -> "LaurentSeries":
        """Multiply by lam**s."""
        floor = None if self._floor is None else self._floor + s
        return LaurentSeries({e + s: c for e, c in self._terms.items()}, floor)

    def truncate(self, floor: int) -> "LaurentSeries":
        if self._floor is not None and floor < self._floor:
            raise TruncationError("cannot lower a truncation floor")
        return LaurentSeries(self._terms, floor)

    def map_coefficients(self, fn) -> "LaurentSeries":
        return LaurentSeries({e: fn(c) for e, c in self._terms.items()}, self._floor)

    def agrees_with(self, other: "LaurentSeries") -> bool:
        """Equality on every exponent known to both series."""
        floor = _max_floor(self._floor, other._floor)
        exps = set(self._terms) | set(other._terms)
        return all(
            self._terms.get(e, Poly()) == other._terms.get(e, Poly())
            for e in exps
            if floor is None or e >= floor
        )

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self._floor == other._floor and self._terms == other._terms

    def __hash__(self):
        return hash((self._floor, tuple(sorted(self._terms.items()))))

    def __repr__(self):
        body = " + ".join(f"({c})*lam^{e}" for e, c in sorted(self._terms.items(), reverse=True))
        return f"LaurentSeries({body or '0'}, floor={self._floor})"

    def to_json(self) -> dict:
        return {
            "floor": self._floor,
            "terms": {str(e): c.to_json() for e, c in sorted(self._terms.items())},
        }


class MultiSeries:
    """Sparse series in lam_1..lam_k with a floor per variable.

    Multiplication assumes each operand's truncated tail stays below the
    stored exponents of its partner in every variable, which holds for
    series in inverse powers. Geometric expansions of inverse differences
    violate this in the smaller variable, so products of several of them
    are only certified through an independent argument (see the k-point
    code), never by this class alone.
    """

    __slots__ = ("_k", "_terms", "_floors")

    def __init__(self, k: int, terms: Mapping[tuple, object] | None = None,
                 floors: Iterable[int | None] | None = None):
        self._k = int(k)
        floors = tuple(floors) if floors is not None else (None,) * self._k
        if len(floors) != self._k:
            raise ValueError("one floor per variable is required")
        self._floors = floors
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != self._k:
                raise ValueError("exponent vector has the wrong length")
            c = Poly.coerce(c)
            if c and self._above(e):
                clean[e] = c
        self._terms = clean

    def _above(self, e) -> bool:
        return all(f is None or x >= f for x, f in zip(e, self._floors))

    @property
    def nvars(self) -> int:
        return self._k

    @property
    def floors(self) -> tuple:
        return self._floors

    def items(self) -> list[tuple[tuple, Poly]]:
        return sorted(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def coefficient(self, e) -> Poly:
        e = tuple(e)
        if len(e) != self._k:
            raise ValueError("exponent vector has the wrong length")
        if not self._above(e):
            raise TruncationError(f"exponent {e} is below the truncation floors {self._floors}")
        return self._terms.get(e, Poly())

    def _uppers(self):
        ups = []
        for j in range(self._k):
            cands = [e[j] for e in self._terms]
            if self._floors[j] is not None:
                cands.append(self._floors[j] - 1)
            ups.append(max(cands) if cands else None)
        return ups

    def _check(self, other):
        if not isinstance(other, MultiSeries) or other._k != self._k:
            raise TypeError("operands must be MultiSeries in the same variables")

    def __add__(self, other):
        self._check(other)
        floors = tuple(_max_floor(a, b) for a, b in zip(self._floors, other._floors))
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out[e] + c if e in out else c
        return MultiSeries(self._k, out, floors)

    def __neg__(self):
        return MultiSeries(self._k, {e: -c for e, c in self._terms.items()}, self._floors)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiSeries):
            c = Poly.coerce(other)
            return MultiSeries(self._k, {e: v * c for e, v in self._terms.items()}, self._floors)
        self._check(other)
        up_a, up_b = self._uppers(), other._uppers()
        floors = []
        for j in range(self._k):
            cands = []
            if self._floors[j] is not None and up_b[j] is not None:
                cands.append(self._floors[j] + up_b[j])
            if other._floors[j] is not None and up_a[j] is not None:
                cands.append(other._floors[j] + up_a[j])
            if not cands:
                cands = [f for f in (self._floors[j], other._floors[j]) if f is not None]
            floors.append(max(cands) if cands else None)
        out: dict[tuple, Poly] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                if any(f is not None and x < f for x, f in zip(e, floors)):
                    continue
                v = c1 * c2
                out[e] = out[e] + v if e in out else v
        return MultiSeries(self._k, out, floors)

    __rmul__ = __mul__

    def restrict(self, floors) -> "MultiSeries":
        """Raise floors, discarding the terms that fall below them."""
        floors = tuple(floors)
        for new, old in zip(floors, self._floors):
            if old is not None and (new is None or new < old):
                raise TruncationError("cannot lower a truncation floor")
        return MultiSeries(self._k, self._terms, floors)

    def __eq__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return (self._k, self._floors, self._terms) == (other._k, other._floors, other._terms)

    def __hash__(self):
        return hash((self._k, self._floors, tuple(sorted(self._terms.items()))))

    def __repr__(self):
        return f"MultiSeries(k={self._k}, terms={len(self._terms)}, floors={self._floors})"

    def to_json(self) -> dict:
        return {
            "floors": list(self._floors),
            "terms": [[list(e), c.to_json()] for e, c in sorted(self._terms.items())],
        }


def expand_inverse_difference(pos_a: int, pos_b: int, order: int, nvars: int,
                              region: Iterable[int] | None = None) -> MultiSeries:
    """Expand 1/(lam_a - lam_b) as a geometric series.

    ``region`` lists the variable positions from largest to smallest modulus
    (default: 0, 1, ..., nvars-1). The expansion runs in powers of the
    smaller variable over the larger one, keeping t = 0..order.
    """
    if pos_a == pos_b:
        raise ValueError("inverse difference of a variable with itself")
    for p in (pos_a, pos_b):
        if not 0 <= p < nvars:
            raise ValueError(f"variable position {p} out of range")
    rank = list(range(nvars))
    if region is not None:
        region = list(region)
        if sorted(region) != list(range(nvars)):
            raise ValueError("region must be a permutation of the variable positions")
        for r, v in enumerate(region):
            rank[v] = r
    if rank[pos_a] < rank[pos_b]:
        big, small, sign = pos_a, pos_b, 1
    else:
        big, small, sign = pos_b, pos_a, -1
    terms = {}
    for t in range(order + 1):
        e = [0] * nvars
        e[small] = t
        e[big] = -t - 1
        terms[tuple(e)] = Poly.const(sign)
    floors = [None] * nvars
    floors[big] = -order - 1
    return MultiSeries(nvars, terms, floors)

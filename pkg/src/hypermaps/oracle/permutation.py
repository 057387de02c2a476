"""Permutations of {1..d} and conjugacy-class iteration.

Images are stored 0-based; cycle notation in and out is 1-based.
"""

from __future__ import annotations

from collections import Counter
from math import factorial, prod
from typing import Iterable, Iterator, Sequence


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("images do not form a bijection of 0..d-1")
        self.images = images

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(range(d))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], d: int) -> "Permutation":
        """Build from 1-based cycles; unlisted points are fixed."""
        images = list(range(d))
        seen = set()
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                if a in seen or not 1 <= a <= d:
                    raise ValueError(f"bad or repeated point {a}")
                seen.add(a)
                images[a - 1] = b - 1
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        """Image of a 1-based point."""
        return self.images[x - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (p * q)(x) = p(q(x))."""
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        return Permutation(self.images[x] for x in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x + 1)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def num_cycles(self) -> int:
        return len(self.cycles())

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles() if len(c) > 1)
        return f"Permutation({body or '()'}, d={self.degree})"


def transitivity(generators: Sequence[Permutation], d: int) -> bool:
    """True iff the group generated acts on {1..d} with a single orbit."""
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        if g.degree != d:
            raise ValueError("generator of the wrong degree")
        for i, x in enumerate(g.images):
            a, b = find(i), find(x)
            if a != b:
                parent[a] = b
    return len({find(i) for i in range(d)}) <= 1


def class_size(cycle_type: Sequence[int]) -> int:
    d = sum(cycle_type)
    counts = Counter(cycle_type)
    return factorial(d) // prod(c**m * factorial(m) for c, m in counts.items())


def canonical(cycle_type: Sequence[int]) -> Permutation:
    """The permutation whose cycles are consecutive blocks of the given lengths."""
    cycles, start = [], 1
    for length in cycle_type:
        cycles.append(list(range(start, start + length)))
        start += length
    return Permutation.from_cycles(cycles, sum(cycle_type))


def iter_class(cycle_type: Sequence[int]) -> Iterator[Permutation]:
    """Every permutation with the given cycle type, each exactly once.

    Cycles are filled in order of decreasing length; each cycle starts at its
    smallest point, and equal-length cycles appear in increasing order of
    their smallest points.
    """
    lengths = sorted(cycle_type, reverse=True)
    d = sum(lengths)
    images = [None] * d

    def place(idx, unused, prev_len, prev_start):
        if idx == len(lengths):
            yield Permutation(images)
            return
        length = lengths[idx]
        for start in sorted(unused):
            if length == prev_len and start < prev_start:
                continue
            rest = unused - {start}
            yield from fill(idx, length, start, [start], rest, prev_len)

    def fill(idx, length, start, cyc, unused, prev_len):
        if len(cyc) == length:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
            yield from place(idx + 1, unused, length, start)
            return
        for x in sorted(unused):
            if x < start:
                continue
            yield from fill(idx, length, start, cyc + [x], unused - {x}, prev_len)

    yield from place(0, frozenset(range(d)), None, -1)

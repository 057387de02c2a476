"""Brute-force hypermap counts from the permutation-triple definition.

sigma2 is fixed to the canonical permutation with labelled cycles of lengths
b_1, ..., b_k on consecutive blocks, and sigma1 runs over every permutation
whose cycles all have length l. Each transitive pair contributes to the genus
read off from the number of cycles of sigma0 = (sigma1 sigma2)^(-1). The
weighted count of labelled hypermaps is (number of triples) / d!, and fixing
sigma2 removes a factor d!/prod(b), so the tallies are divided by prod(b).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

import numpy as np

from ..engine.points import genus_bound
from ..errors import EngineError, OracleCapError
from .permutation import canonical, iter_class, transitivity

DEFAULT_CAP = 12


@dataclass(frozen=True)
class HypermapSpec:
    l: int
    b: tuple
    g: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if self.l < 2:
            raise ValueError("l must be at least 2")
        if not self.b or min(self.b) < 1:
            raise ValueError("b must be a nonempty list of positive integers")
        if self.g is not None and self.g < 0:
            raise ValueError("genus must be nonnegative")

    @property
    def d(self) -> int:
        return sum(self.b)

    @property
    def k(self) -> int:
        return len(self.b)


def genus_from_cycles(l: int, b, vertices: int) -> int:
    """Genus of a hypermap with the given number of sigma0 cycles."""
    k, d = len(b), sum(b)
    twice = 2 - vertices - k + (l - 1) * d // l
    if twice % 2 or twice < 0:
        raise EngineError(f"{vertices} vertices give no integer genus for l={l}, b={tuple(b)}")
    return twice // 2


def uniform_class_size(l: int, d: int) -> int:
    """Number of permutations of {1..d} whose cycles all have length l."""
    return factorial(d) // (l ** (d // l) * factorial(d // l))


def _kernel_inputs(spec: HypermapSpec):
    sigma2 = np.array(canonical(spec.b).images, dtype=np.int64)
    block = np.repeat(np.arange(spec.k, dtype=np.int64), spec.b)
    return sigma2, block


def _run_chunk(args):
    from .kernel import enumerate_uniform_class

    l, b, prefix = args
    spec = HypermapSpec(l, b)
    sigma2, block = _kernel_inputs(spec)
    hist = np.zeros(spec.d + 1, dtype=np.int64)
    visited = enumerate_uniform_class(
        spec.d, l, sigma2, block, spec.k, np.array(prefix, dtype=np.int64), hist
    )
    return int(visited), [int(x) for x in hist]


def _prefixes(l: int, d: int, jobs: int) -> list[tuple]:
    """Split the class by the second point of the first cycle."""
    if jobs <= 1 or d < 2:
        return [()]
    return [(0, a) for a in range(1, d)]


def _finish(spec: HypermapSpec, hist) -> dict:
    if spec.d % spec.l:
        return {} if spec.g is None else {spec.g: Fraction(0)}
    result = {g: Fraction(0) for g in range(max(genus_bound(spec.l, spec.b), -1) + 1)}
    for vertices, count in enumerate(hist):
        if count:
            g = genus_from_cycles(spec.l, spec.b, vertices)
            if g not in result:
                raise EngineError(f"triple of genus {g} exceeds the genus bound")
            result[g] += Fraction(count, prod(spec.b))
    if spec.g is not None:
        return {spec.g: result.get(spec.g, Fraction(0))}
    return result


def brute_count(spec: HypermapSpec, cap: int = DEFAULT_CAP, jobs: int = 1) -> dict:
    """Weighted counts of connected labelled l-hypermaps, keyed by genus.

    Returns every genus from 0 to the genus bound (or only ``spec.g`` when it
    is set). The map is empty when l does not divide |b|.
    """
    if spec.d > cap:
        raise OracleCapError(f"degree {spec.d} exceeds the oracle cap {cap}")
    if spec.d % spec.l:
        return _finish(spec, [])
    chunks = [(spec.l, spec.b, p) for p in _prefixes(spec.l, spec.d, jobs)]
    if len(chunks) == 1:
        results = [_run_chunk(chunks[0])]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_chunk, chunks))
    hist = [0] * (spec.d + 1)
    visited = 0
    for v, h in results:
        visited += v
        hist = [x + y for x, y in zip(hist, h)]
    expected = uniform_class_size(spec.l, spec.d)
    if visited != expected:
        raise EngineError(f"enumerated {visited} permutations, expected {expected}")
    return _finish(spec, hist)


def brute_count_reference(spec: HypermapSpec, cap: int = 8) -> dict:
    """Pure-Python version of brute_count over Permutation objects, for small d."""
    if spec.d > cap:
        raise OracleCapError(f"degree {spec.d} exceeds the reference cap {cap}")
    if spec.d % spec.l:
        return _finish(spec, [])
    sigma2 = canonical(spec.b)
    hist = [0] * (spec.d + 1)
    for sigma1 in iter_class([spec.l] * (spec.d // spec.l)):
        if not transitivity([sigma1, sigma2], spec.d):
            continue
        sigma0 = (sigma1 * sigma2).inverse()
        hist[sigma0.num_cycles()] += 1
    return _finish(spec, hist)

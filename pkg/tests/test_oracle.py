from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from hypermaps.engine import count_poly
from hypermaps.errors import OracleCapError
from hypermaps.oracle import (
    HypermapSpec,
    Permutation,
    brute_count,
    brute_count_reference,
    canonical,
    check_duality,
    check_mgk_hurwitz,
    class_size,
    genus_from_cycles,
    hurwitz_strict,
    iter_class,
    mgk_from_hurwitz,
    transitivity,
    uniform_class_size,
)
from hypermaps.verify import partitions

permutations = st.integers(1, 7).flatmap(lambda d: st.permutations(range(d)).map(Permutation))


# ----------------------------------------------------------- permutations


def test_permutation_basics():
    p = Permutation.from_cycles([[1, 2, 3]], 4)
    assert p(1) == 2 and p(3) == 1 and p(4) == 4
    assert p.cycles() == [(1, 2, 3), (4,)]
    assert p.cycle_type() == (3, 1)
    assert (p * p.inverse()) == Permutation.identity(4)
    q = Permutation.from_cycles([[1, 2]], 4)
    # (p * q)(x) = p(q(x))
    assert (p * q)(1) == p(q(1)) == 3
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


@given(permutations, st.data())
def test_composition_and_inversion(p, data):
    q = Permutation(data.draw(st.permutations(range(p.degree))))
    r = Permutation(data.draw(st.permutations(range(p.degree))))
    assert (p * q) * r == p * (q * r)
    assert (p * q).inverse() == q.inverse() * p.inverse()
    assert sum(len(c) for c in p.cycles()) == p.degree


def test_transitivity():
    assert not transitivity([Permutation.identity(2)], 2)
    for d in range(1, 7):
        assert transitivity([canonical((d,))], d)
    assert not transitivity([canonical((2, 2))], 4)
    assert transitivity([canonical((2, 2)), Permutation.from_cycles([[2, 3]], 4)], 4)


def test_transitive_genus_zero_triple_at_degree_12():
    # a planar 2-hypermap: sigma2 a 12-cycle, sigma1 a non-crossing matching
    sigma2 = canonical((12,))
    sigma1 = Permutation.from_cycles([[1, 12], [2, 11], [3, 10], [4, 9], [5, 8], [6, 7]], 12)
    assert transitivity([sigma1, sigma2], 12)
    sigma0 = (sigma1 * sigma2).inverse()
    assert genus_from_cycles(2, (12,), sigma0.num_cycles()) == 0


@pytest.mark.parametrize("d", range(1, 7))
def test_iter_class_covers_each_class_once(d):
    seen = set()
    for ctype in partitions(d):
        members = list(iter_class(ctype))
        assert len(members) == len(set(members)) == class_size(ctype)
        assert all(p.cycle_type() == ctype for p in members)
        seen.update(members)
    assert len(seen) == factorial(d)


def test_class_sizes():
    assert class_size((3, 3, 3, 3)) == 246400
    assert uniform_class_size(3, 12) == 246400
    assert class_size((3,)) == 2


# ----------------------------------------------------------- brute force


@pytest.mark.parametrize(
    "l,b,expected",
    [
        (5, (1, 2, 2), {0: 4, 1: 2}),
        (3, (3, 3), {0: 1, 1: 3}),
        (4, (4,), {0: Fraction(1, 4), 1: Fraction(5, 4)}),
        (3, (1, 1, 1), {0: 2}),
        (3, (3, 3, 3), {0: 8, 1: Fraction(152, 3), 2: 16}),
    ],
)
def test_brute_count_examples(l, b, expected):
    assert brute_count(HypermapSpec(l, b)) == expected


def test_brute_count_genus_filter_and_divisibility():
    assert brute_count(HypermapSpec(5, (1, 2, 2), g=0)) == {0: 4}
    assert brute_count(HypermapSpec(5, (1, 2, 2), g=3)) == {3: 0}
    assert brute_count(HypermapSpec(3, (2,))) == {}


def test_brute_count_cap():
    with pytest.raises(OracleCapError):
        brute_count(HypermapSpec(2, (7, 7)))
    with pytest.raises(OracleCapError):
        brute_count(HypermapSpec(2, (2, 2)), cap=3)


def test_brute_count_chunked_matches_single():
    spec = HypermapSpec(4, (3, 2, 2, 1))
    assert brute_count(spec, jobs=2) == brute_count(spec)


@pytest.mark.parametrize("d", range(2, 9))
def test_kernel_matches_python_reference(d):
    for l in range(2, d + 1):
        if d % l:
            continue
        for b in partitions(d):
            spec = HypermapSpec(l, b)
            assert brute_count(spec) == brute_count_reference(spec)


@pytest.mark.parametrize("d", range(2, 11))
def test_brute_count_matches_engine_small(d):
    for l in range(2, min(d, 6) + 1):
        if d % l:
            continue
        for b in partitions(d):
            assert brute_count(HypermapSpec(l, b)) == count_poly(l, b).by_genus


def test_genus_from_cycles_rejects_bad_parity():
    from hypermaps.errors import EngineError

    with pytest.raises(EngineError):
        genus_from_cycles(3, (3, 3), 3)


# ----------------------------------------------------------- Hurwitz numbers


def test_hurwitz_examples():
    assert hurwitz_strict(0, (3,), (3,)) == 2
    assert hurwitz_strict(0, (2,), (1, 1)) == 1
    assert hurwitz_strict(-1, (2,), (2,)) == 0
    # r = 0 forces beta = alpha; only a single cycle acts transitively
    assert hurwitz_strict(0, (4,), (4,)) == class_size((4,))


def test_hurwitz_does_not_depend_on_the_representative():
    other = Permutation.from_cycles([[1, 3], [2, 4]], 4)
    assert hurwitz_strict(1, (2, 2), (4,)) == hurwitz_strict(1, (2, 2), (4,), alpha=other)
    other = Permutation.from_cycles([[2, 5, 6], [1, 3, 4]], 6)
    for nu in [(6,), (3, 3), (2, 2, 2), (4, 1, 1)]:
        for g in range(2):
            assert hurwitz_strict(g, (3, 3), nu) == hurwitz_strict(g, (3, 3), nu, alpha=other)


def test_mgk_from_hurwitz_examples():
    assert mgk_from_hurwitz(2, (2,), 0) == count_poly(2, (2,)).by_genus[0]
    assert mgk_from_hurwitz(3, (3,), 0) == Fraction(1, 3)
    assert mgk_from_hurwitz(3, (3,), 1) == Fraction(1, 3)
    assert mgk_from_hurwitz(5, (1, 2, 2), 0) == 4


@pytest.mark.parametrize("d", range(1, 7))
def test_hurwitz_cross_check(d):
    for l in range(2, d + 1):
        if d % l:
            continue
        for nu in partitions(d):
            for g in range(3):
                assert check_mgk_hurwitz(l, nu, g).passed


# ----------------------------------------------------------- duality


@pytest.mark.parametrize("l,b,k", [(3, 2, 3), (5, 2, 5), (2, 3, 2), (4, 4, 2)])
def test_duality(l, b, k):
    assert check_duality(l, b, k).passed


def test_duality_through_the_oracle():
    assert check_duality(3, 2, 3, oracle=True).passed
    assert check_duality(2, 3, 2, g=0, oracle=True).passed

"""Named verification suites; each returns a Report.

The suites compare independent computations of the same quantities and
check structural properties of the counts. They back the ``verify``
command of the CLI and are reused by the test suite.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .curve import verify_ctilde_shifts, verify_curve_equations, verify_f_identities, verify_ffTmT, verify_tcfin
from .engine.closed import (
    genus_closed,
    special_two_point_series,
    top_genus,
    two_point_explicit,
    verify_psiB_wave,
    zagier_t_formula,
    zagier_Y_check,
)
from .engine.points import (
    count_poly,
    genus_bound,
    k_point,
    k_point_coefficient,
    k_point_series,
    one_point,
    one_point_curve,
    top_exponent,
)
from .engine.resolvent import y_entry, y_entry_curve
from .oracle.brute import HypermapSpec, brute_count
from .oracle.hurwitz import check_duality, check_mgk_hurwitz
from .report import Report


def partitions(n: int, largest: int | None = None):
    """Partitions of n as non-increasing tuples."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def suite_tcfin(lmin: int = 2, lmax: int = 5, smax: int = 6, mmax: int = 6, **_) -> Report:
    rep = Report("Ct closed form")
    for l in range(lmin, lmax + 1):
        rep.extend(verify_tcfin(l, smax, mmax, range(-3, 7)), f"l={l}")
    return rep


def suite_shifts(lmin: int = 2, lmax: int = 5, smax: int = 8, **_) -> Report:
    rep = Report("Ct shift identities")
    for r in range(lmin - 1, lmax):
        rep.extend(verify_ctilde_shifts(r, 4, smax), f"r={r}")
    return rep


F_GRID_R = (1, 2, 3, 4, Fraction(1, 2), Fraction(-1, 3), Fraction(5, 2))
F_GRID_J = (-2, -1, 0, 1, 2, 3, Fraction(1, 2))


def suite_fids(smax: int = 6, **_) -> Report:
    """The f-series shift identities, the f-product formula and the curve equations."""
    rep = Report("f-series identities")
    for r in F_GRID_R:
        for j in F_GRID_J:
            rep.extend(verify_f_identities(r, j, smax), f"r={r} j={j}")
        rep.extend(verify_curve_equations(r, 2 * smax), f"r={r}")
    return rep


def suite_fftmt(lmin: int = 2, lmax: int = 5, smax: int = 6, **_) -> Report:
    rep = Report("f product formula")
    for r in range(lmin - 1, lmax):
        for i in range(-2, 4):
            for j in range(-2, 4):
                rep.extend(verify_ffTmT(r, i, j, smax), f"r={r} i={i} j={j}")
    return rep


def suite_dualpath(lmin: int = 2, lmax: int = 5, bmax: int = 10, mmax: int = 5, **_) -> Report:
    """Pairs of independent routes to the same series or coefficients."""
    rep = Report("dual-path equalities")
    for l in range(lmin, lmax + 1):
        order = l * mmax + 1
        a, b = one_point(l, order), one_point_curve(l, order)
        rep.add(f"one-point series vs curve form l={l}", a == b)
        order = 4 * l
        for i in range(1, l + 1):
            for j in range(l):
                same = y_entry(l, i, j, order).times_n() == y_entry_curve(l, i, j, order).times_n()
                rep.add(f"n*y vs curve form l={l} i={i} j={j}", same)
    for l in range(lmin, min(lmax, 4) + 1):
        for a in range(bmax + 1):
            for b in range(bmax + 1 - a):
                explicit = two_point_explicit(l, a, b)
                extracted = k_point_coefficient(l, (-(a + 2), -(b + 2)))
                rep.add(f"two-point formula l={l} a={a} b={b}", explicit == extracted, f"{explicit} vs {extracted}")
    for l, k, b_max in ((2, 2, 5), (3, 2, 5), (3, 3, 3), (4, 3, 3)):
        if not lmin <= l <= lmax:
            continue
        literal = k_point_series(l, k, b_max)
        extracted = k_point(l, k, b_max)
        rep.add(f"literal product vs extraction l={l} k={k} b_max={b_max}", literal == extracted)
    return rep


def suite_zagier(lmin: int = 2, lmax: int | None = None, gmax: int = 3, dmax: int = 20, **_) -> Report:
    """Genus-resolved one-point counts from closed formulas and from the series."""
    rep = Report("one-point closed formulas")
    lmax = dmax if lmax is None else lmax
    for l in range(lmin, lmax + 1):
        mmax = dmax // l
        if not mmax:
            continue
        series = one_point(l, l * mmax + 1)
        for m in range(1, mmax + 1):
            coeff = series.coefficient(-(l * m + 1))
            for g in range(gmax + 1):
                top = 1 - 2 * g + (l - 1) * m
                if top < 0:
                    continue
                extracted = coeff.coeff(top)
                closed = genus_closed(l, g, m)
                t_series = zagier_t_formula(l, m, g)
                rep.add(f"l={l} m={m} g={g}", extracted == closed == t_series, f"{extracted}, {closed}, {t_series}")
            if (l - 1) * m % 2 == 0:
                extracted = coeff.coeff(1)
                rep.add(f"top genus l={l} m={m}", extracted == top_genus(l, m), f"{extracted} vs {top_genus(l, m)}")
    for l in range(lmin, min(lmax, 4) + 1):
        for m in range(1, 4):
            rep.extend(zagier_Y_check(l, m, 6), f"l={l} m={m}")
    return rep


def suite_special2b(lmin: int = 2, lmax: int = 4, bmax: int = 8, **_) -> Report:
    rep = Report("two-point series with a face of degree 2")
    for l in range(lmin, lmax + 1):
        rep.extend(special_two_point_series(l, bmax + 3), f"l={l}")
    return rep


def suite_psib(lmin: int = 2, lmax: int = 4, order: int = 4, **_) -> Report:
    rep = Report("type-B wave equation")
    for l in range(lmin, lmax + 1):
        rep.extend(verify_psiB_wave(l, order), f"l={l}")
    return rep


def suite_hurwitz(lmin: int = 2, lmax: int = 6, dmax: int = 6, **_) -> Report:
    """Brute-force counts against strictly monotone Hurwitz numbers, |nu| <= dmax."""
    rep = Report("hypermaps vs monotone Hurwitz numbers")
    for d in range(1, dmax + 1):
        for l in range(lmin, min(lmax, d) + 1):
            if d % l:
                continue
            for nu in partitions(d):
                # one genus past the bound checks that both sides vanish there
                for g in range(max(genus_bound(l, nu), 0) + 2):
                    rep.extend(check_mgk_hurwitz(l, nu, g), f"l={l} nu={nu}")
    return rep


DUALITY_CASES = ((3, 2, 3), (5, 2, 5), (2, 3, 2))


def suite_duality(l: int | None = None, b: int | None = None, k: int | None = None, **_) -> Report:
    rep = Report("blue/white duality")
    cases = DUALITY_CASES if l is None else ((l, b, k),)
    for case in cases:
        rep.extend(check_duality(*case), "l={} b={} k={}".format(*case))
    return rep


def _oracle_pair(args):
    l, b = args
    return l, b, brute_count(HypermapSpec(l, b)), count_poly(l, b).by_genus


def oracle_cases(lmin: int = 2, lmax: int = 6, dmax: int = 12):
    for l in range(lmin, lmax + 1):
        for d in range(l, dmax + 1, l):
            for b in partitions(d):
                yield l, b


def suite_oracle(lmin: int = 2, lmax: int = 6, dmax: int = 12, jobs: int = 1, **_) -> Report:
    """Brute-force counts against the series engine for every l <= lmax, |b| <= dmax."""
    rep = Report("oracle equivalence")
    cases = list(oracle_cases(lmin, lmax, dmax))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_oracle_pair, cases, chunksize=1))
    else:
        results = [_oracle_pair(c) for c in cases]
    for l, b, brute, engine in results:
        rep.add(f"l={l} b={b}", brute == engine, f"{brute} vs {engine}")
    return rep


def _sample_b(rng: random.Random, l: int, dmax: int):
    k = rng.randint(1, 4)
    parts = [rng.randint(1, max(1, dmax // k)) for _ in range(k)]
    if rng.random() < 0.75:
        # most samples should have l dividing |b|, where the counts are nonzero
        parts[-1] += -sum(parts) % l
    return tuple(parts)


def check_count_properties(l: int, b) -> Report:
    """Symmetry, divisibility, genus support, parity and nonnegativity for one (l, b)."""
    b = tuple(b)
    rep = Report(f"properties l={l} b={b}")
    k, d = len(b), sum(b)
    label = f"l={l} b={b}"
    if k == 1:
        raw = one_point(l, max(d, l) + 1).coefficient(-(d + 1))
        variants = [raw]
    else:
        fixed = tuple(range(k))
        variants = [
            k_point_coefficient(l, [-(x + 1) for x in perm], region=fixed)
            for perm in sorted(set(itertools.permutations(b)))
        ]
        raw = variants[0]
    rep.add(f"symmetric under permuting b, {label}", all(v == raw for v in variants))
    if d % l:
        rep.add(f"vanishes when l does not divide |b|, {label}", raw.is_zero(), str(raw))
        return rep
    top = top_exponent(l, b)
    gmax = genus_bound(l, b)
    for e, c in raw.terms():
        g, odd = divmod(top - e, 2)
        rep.add(f"n^{e} has the parity of the top exponent, {label}", not odd)
        rep.add(f"n^{e} lies within the genus bound, {label}", 0 <= g <= gmax)
        rep.add(f"n^{e} coefficient is nonnegative, {label}", c >= 0, str(c))
    return rep


def check_pole_cancellation(l: int, k: int, b_max: int) -> Report:
    rep = Report(f"pole cancellation l={l} k={k}")
    series = k_point(l, k, b_max)
    for e, c in series.items():
        rep.add(f"exponent {e}", max(e) <= -2, str(c))
    if not len(series):
        rep.add("series is nonzero", False)
    return rep


def check_region_independence(l: int, b) -> Report:
    k = len(b)
    e = [-(x + 1) for x in b]
    forward = k_point_coefficient(l, e, region=tuple(range(k)))
    backward = k_point_coefficient(l, e, region=tuple(reversed(range(k))))
    rep = Report(f"region independence l={l} b={tuple(b)}")
    rep.add("forward vs reversed ordering", forward == backward, f"{forward} vs {backward}")
    return rep


def suite_properties(seed: int = 0, samples: int = 40, dmax: int = 12, **_) -> Report:
    """Structural properties on a seeded random sample plus fixed pole checks."""
    rng = random.Random(seed)
    rep = Report(f"structural properties (seed {seed})")
    for _ in range(samples):
        l = rng.randint(2, 6)
        b = _sample_b(rng, l, dmax)
        rep.extend(check_count_properties(l, b))
        if 2 <= len(b) <= 3 and sum(b) <= 9:
            rep.extend(check_region_independence(l, b))
    for l, k, b_max in ((2, 2, 4), (3, 2, 4), (3, 3, 2), (4, 2, 4)):
        rep.extend(check_pole_cancellation(l, k, b_max))
    return rep


SUITES = {
    "tcfin": suite_tcfin,
    "shifts": suite_shifts,
    "fids": suite_fids,
    "fftmt": suite_fftmt,
    "dualpath": suite_dualpath,
    "zagier": suite_zagier,
    "special2b": suite_special2b,
    "psib": suite_psib,
    "hurwitz": suite_hurwitz,
    "duality": suite_duality,
    "oracle": suite_oracle,
    "properties": suite_properties,
}


def run_suite(name: str, **options) -> Report:
    """Run one suite, or every suite for ``all``; options not used by a suite are ignored."""
    if name == "all":
        rep = Report("all suites")
        for key, fn in SUITES.items():
            rep.extend(fn(**options), key)
        return rep
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](**options)

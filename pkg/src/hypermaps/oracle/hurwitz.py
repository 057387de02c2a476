"""Strictly monotone double Hurwitz numbers and the checks built on them."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import factorial, prod

from ..engine.points import count_poly, genus_bound
from ..report import Report
from .brute import HypermapSpec, brute_count
from .permutation import Permutation, canonical, class_size, transitivity

HURWITZ_CAP = 6


def _monotone_count(alpha: Permutation, r: int, nu: tuple) -> int:
    """Sequences of r transpositions (a_j b_j), a_j < b_j, b_1 < ... < b_r,
    with alpha tau_1 ... tau_r of cycle type nu and the tuple transitive."""
    d = alpha.degree
    target = tuple(sorted(nu, reverse=True))
    found = 0

    def search(current: Permutation, taus: list, last_b: int):
        nonlocal found
        if len(taus) == r:
            if current.cycle_type() == target and transitivity([alpha] + taus, d):
                found += 1
            return
        # leave room for the remaining strictly increasing b's
        for b in range(last_b + 1, d - (r - len(taus) - 1)):
            for a in range(b):
                images = list(range(d))
                images[a], images[b] = b, a
                tau = Permutation(images)
                search(current * tau, taus + [tau], b)

    search(alpha, [], 0)
    return found


def hurwitz_strict(g: int, mu, nu, alpha: Permutation | None = None) -> int:
    """h_g(mu, nu): tuples (alpha, tau_1..tau_r, beta) with alpha of type mu,
    beta = alpha tau_1 ... tau_r of type nu, strictly increasing larger
    elements and a transitive action, where r = len(mu) + len(nu) + 2g - 2.

    ``alpha`` may name the representative of the class of mu that is fixed
    during the search; the count does not depend on the choice.
    """
    mu, nu = tuple(mu), tuple(nu)
    d = sum(mu)
    if sum(nu) != d:
        raise ValueError("mu and nu must have the same weight")
    if d > HURWITZ_CAP:
        raise ValueError(f"degree {d} exceeds the Hurwitz search cap {HURWITZ_CAP}")
    r = len(mu) + len(nu) + 2 * g - 2
    if r < 0:
        return 0
    if alpha is None:
        alpha = canonical(sorted(mu, reverse=True))
    elif alpha.cycle_type() != tuple(sorted(mu, reverse=True)):
        raise ValueError("alpha does not have cycle type mu")
    return class_size(mu) * _monotone_count(alpha, r, nu)


def mgk_from_hurwitz(l: int, nu, g: int) -> Fraction:
    """M_{g,k}(nu) as prod_i n_i(nu)! / |nu|! times h_g((l,...,l), nu)."""
    d = sum(nu)
    mu = (l,) * (d // l)
    weight = prod(factorial(m) for m in Counter(nu).values())
    return Fraction(weight, factorial(d)) * hurwitz_strict(g, mu, nu)


def check_mgk_hurwitz(l: int, nu, g: int) -> Report:
    """Compare the brute-force hypermap count with the Hurwitz-number side."""
    nu = tuple(nu)
    rep = Report(f"hypermaps vs monotone Hurwitz l={l} nu={nu} g={g}")
    if sum(nu) % l:
        raise ValueError("l must divide |nu|")
    direct = brute_count(HypermapSpec(l, nu, g)).get(g, Fraction(0))
    via_hurwitz = mgk_from_hurwitz(l, nu, g)
    rep.add(f"g={g}", direct == via_hurwitz, f"{direct} vs {via_hurwitz}")
    return rep


def check_duality(l: int, b: int, k: int, g: int | None = None, oracle: bool = False) -> Report:
    """k'! M^[l]_{g,k}(b,...,b) = k! M^[b]_{g,k'}(l,...,l) with k' = bk/l."""
    if (b * k) % l:
        raise ValueError("l must divide b*k")
    k2 = b * k // l
    rep = Report(f"blue/white duality l={l} b={b} k={k}")
    if b < 2:
        raise ValueError("the dual side needs b >= 2")

    def counts(ell, parts):
        if oracle:
            return brute_count(HypermapSpec(ell, parts))
        return count_poly(ell, parts).by_genus

    left = counts(l, (b,) * k)
    right = counts(b, (l,) * k2)
    top = max(genus_bound(l, (b,) * k), genus_bound(b, (l,) * k2))
    genera = range(top + 1) if g is None else [g]
    for genus in genera:
        lhs = factorial(k2) * left.get(genus, Fraction(0))
        rhs = factorial(k) * right.get(genus, Fraction(0))
        rep.add(f"g={genus}", lhs == rhs, f"{lhs} vs {rhs}")
    return rep

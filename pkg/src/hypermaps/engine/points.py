"""One-point and k-point generating series and the counts extracted from them.

The k-point series is a cyclic sum of traces of products of the resolvent
matrix divided by products of differences lam_a - lam_b, expanded in a
fixed region |lam_{r0}| > |lam_{r1}| > ... given by a list of positions.

Two routes compute it. ``k_point_series`` multiplies truncated series
literally and is practical for small cases. ``k_point_coefficient`` extracts
a single coefficient with a dynamic programme over the cyclic order, the
matrix rows and the geometric-series indices, evaluating everything at
integer values of n and interpolating at the end.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm, prod

from ..curve import ctilde_as_poly_in_n
from ..errors import EngineError
from ..exact.combinat import binom_poly, binomial, pochhammer
from ..exact.poly import Poly, format_rational
from ..exact.series import LaurentSeries, MultiSeries, expand_inverse_difference
from .resolvent import m_matrix, shift_entry

N = Poly.gen()


# ---------------------------------------------------------------- one point


def one_point(l: int, order: int) -> LaurentSeries:
    """The 1-point function through lam^(-order).

    The coefficient of lam^(-(lm+1)) is lm * M_1(lm; n).
    """
    if l < 2:
        raise ValueError("l must be at least 2")
    if order < l + 1:
        raise ValueError(f"order must be at least l+1 = {l + 1}")
    terms = {}
    m = 1
    while l * m + 1 <= order:
        inner = Poly()
        for s in range(m + 1):
            term = binom_poly(N + l * s, l * m + 1) * binomial(m, s)
            inner = inner + term if s % 2 == 0 else inner - term
        scale = Fraction((-1) ** m * factorial(l * m), l**m * factorial(m))
        terms[-(l * m + 1)] = inner * scale
        m += 1
    return LaurentSeries(terms, -order)


def one_point_curve(l: int, order: int, include_unstable: bool = False) -> LaurentSeries:
    """The 1-point function assembled from the curve coefficients Ct_s.

    The Ct_s route carries an overall factor 2 relative to the Pochhammer
    form, removed here so both series agree. With ``include_unstable`` the
    m = 0 term n/lam is kept as well.
    """
    if l < 2:
        raise ValueError("l must be at least 2")
    if order < l + 1:
        raise ValueError(f"order must be at least l+1 = {l + 1}")
    terms = {}
    m = 0 if include_unstable else 1
    while l * m + 1 <= order:
        s = (l - 1) * m + 1
        scale = Fraction(pochhammer(m + 1, (l - 1) * m), 2 ** ((l - 1) * m + 1))
        terms[-(l * m + 1)] = ctilde_as_poly_in_n(l - 1, 0, 0, s) * scale
        m += 1
    return LaurentSeries(terms, -order)


# --------------------------------------------------- k point, literal route


def _lift(series: LaurentSeries, pos: int, k: int) -> dict:
    out = {}
    for e, c in series.items():
        v = [0] * k
        v[pos] = e
        out[tuple(v)] = c
    return out


def _dict_mul(a: dict, b: dict, min_degree: int) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        d1 = sum(e1)
        for e2, c2 in b.items():
            if d1 + sum(e2) < min_degree:
                continue
            e = tuple(x + y for x, y in zip(e1, e2))
            v = c1 * c2
            out[e] = out[e] + v if e in out else v
    return {e: c for e, c in out.items() if c}


def _dict_add(acc: dict, other: dict, sign: int = 1) -> None:
    for e, c in other.items():
        c = c if sign > 0 else -c
        acc[e] = acc[e] + c if e in acc else c


def cyclic_orders(k: int):
    """Representatives of S_k / C_k: orders starting with position 0."""
    for rest in itertools.permutations(range(1, k)):
        yield (0,) + rest


def _check_region(k: int, region) -> tuple:
    region = tuple(range(k)) if region is None else tuple(region)
    if sorted(region) != list(range(k)):
        raise ValueError("region must list every variable position exactly once")
    return region


def k_point_series(l: int, k: int, b_max: int, region=None, slack: int = 0) -> MultiSeries:
    """k-point series by direct multiplication of truncated expansions.

    Every coefficient with all exponents >= -(b_max+1) is exact: a term of
    total degree D only involves matrix powers and geometric indices up to
    -D - k, and all of those are kept. ``slack`` raises the internal order
    further, which must leave the result unchanged.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if b_max < 1:
        raise ValueError("b_max must be at least 1")
    region = _check_region(k, region)
    floor = -(b_max + 1)
    order = k * b_max + slack
    min_degree = k * floor
    mat = m_matrix(l, order)
    lifted = [
        [[_lift(mat.entry(i, j), v, k) for j in range(1, l + 1)] for i in range(1, l + 1)]
        for v in range(k)
    ]
    total: dict = {}
    for cyc in cyclic_orders(k):
        current = lifted[cyc[0]]
        for v in cyc[1:]:
            nxt = lifted[v]
            new = []
            for i in range(l):
                row = []
                for j in range(l):
                    acc: dict = {}
                    for t in range(l):
                        if current[i][t] and nxt[t][j]:
                            _dict_add(acc, _dict_mul(current[i][t], nxt[t][j], min_degree + k))
                    row.append({e: c for e, c in acc.items() if c})
                new.append(row)
            current = new
        trace: dict = {}
        for i in range(l):
            _dict_add(trace, current[i][i])
        denom = {(0,) * k: 1}
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            factor = expand_inverse_difference(a, b, order, k, region)
            nxt_denom = {}
            for e1, c1 in denom.items():
                for e2, c2 in factor.items():
                    e = tuple(x + y for x, y in zip(e1, e2))
                    nxt_denom[e] = nxt_denom.get(e, 0) + c1 * int(c2.coeff(0))
            denom = {e: c for e, c in nxt_denom.items() if c}
        for d, c in denom.items():
            if min(d) < floor:
                continue
            for e_tr, poly in trace.items():
                e = tuple(x + y for x, y in zip(d, e_tr))
                if min(e) < floor:
                    continue
                v = poly * (-c)
                total[e] = total[e] + v if e in total else v
    if k == 2:
        big, small = region
        for t in range(order + 1):
            e = [0, 0]
            e[big], e[small] = -t - 2, t
            if min(e) >= floor:
                e = tuple(e)
                v = Poly.const(-(l - 1) * (t + 1))
                total[e] = total[e] + v if e in total else v
    return MultiSeries(k, total, (floor,) * k)


# ------------------------------------------------ k point, extraction route


@lru_cache(maxsize=64)
def _node_table(l: int, max_power: int, nodes: tuple):
    """A_p entries evaluated at the nodes and scaled to integers by a common Q."""
    raw = []
    denominators = 1
    for p in range(max_power + 1):
        row = []
        for i in range(1, l + 1):
            hit = shift_entry(l, i, p)
            if hit is None:
                row.append(None)
                continue
            j, poly = hit
            vals = [poly(x) for x in nodes]
            for v in vals:
                denominators = lcm(denominators, v.denominator)
            row.append((j, vals))
        raw.append(row)
    table = []
    for row in raw:
        out = []
        for hit in row:
            if hit is None or not any(hit[1]):
                out.append(None)
            else:
                j, vals = hit
                out.append((j, [int(v * denominators) for v in vals]))
        table.append(out)
    return table, denominators


def _trace_sum_at_nodes(l: int, exponents, region, nodes) -> list[Fraction]:
    """Trace part of the coefficient of prod lam_v^(e_v), at each node value of n.

    Variables of equal exponent are interchangeable, so the cyclic order is
    built up group by group: a state records how many members of each group
    have been visited, the group and relative rank of the last vertex, the
    geometric index flowing into it, and the current matrix row.
    """
    e = list(exponents)
    k = len(e)
    total_power = -sum(e) - k
    width = len(nodes)
    if total_power < 0:
        return [Fraction(0)] * width
    # runs of equal exponent along the region order
    gexp, gsize = [], []
    for v in region:
        if gexp and gexp[-1] == e[v]:
            gsize[-1] += 1
        else:
            gexp.append(e[v])
            gsize.append(1)
    ngroups = len(gexp)
    table, scale = _node_table(l, total_power, tuple(nodes))
    es = gexp[0]
    acc = [0] * width
    for t_close in range(max(-es - 1, 0)):
        for r0 in range(1, l + 1):
            states: dict = {}
            for g in range(ngroups):
                if gsize[g] - (g == 0) <= 0:
                    continue
                cnt = [0] * ngroups
                cnt[0] = 1
                cnt[g] += 1
                rel = 2 if g == 0 else 1
                for t_first in range(-es - 1 - t_close):
                    p_start = -t_close - t_first - 2 - es
                    if p_start > total_power:
                        continue
                    hit = table[p_start][r0 - 1]
                    if hit is None:
                        continue
                    j, vec = hit
                    key = (tuple(cnt), g, rel, t_first, j)
                    cur = states.get(key)
                    states[key] = list(vec) if cur is None else [a + b for a, b in zip(cur, vec)]
            for step in range(k - 1):
                closing = step == k - 2
                new: dict = {}
                for (cnt, gp, jp, c_in, row), val in states.items():
                    ev = gexp[gp]
                    if closing:
                        moves = [(None, None, False)]
                    else:
                        moves = []
                        for g in range(ngroups):
                            c = cnt[g]
                            if c >= gsize[g]:
                                continue
                            for jn in range(2 if g == 0 else 1, c + 2):
                                up = jn > jp if g == gp else gp < g
                                moves.append((g, jn, up))
                    for g, jn, up in moves:
                        t_values = (t_close,) if closing else range(total_power + 1)
                        for t in t_values:
                            if up:
                                c_out, c_next, positive = -t - 1, t, True
                            else:
                                c_out, c_next, positive = t, -t - 1, False
                            p = c_in + c_out - ev
                            if p < 0:
                                if up:
                                    break
                                continue
                            if p > total_power:
                                if not up:
                                    break
                                continue
                            hit = table[p][row - 1]
                            if hit is None:
                                continue
                            j, vec = hit
                            if closing:
                                if j != r0:
                                    continue
                                # the closing edge always points back up to the start
                                acc = [a - x * y for a, x, y in zip(acc, val, vec)]
                                continue
                            nc = list(cnt)
                            nc[g] += 1
                            key = (tuple(nc), g, jn, c_next, j)
                            if positive:
                                prod_vec = [x * y for x, y in zip(val, vec)]
                            else:
                                prod_vec = [-x * y for x, y in zip(val, vec)]
                            cur = new.get(key)
                            new[key] = prod_vec if cur is None else [a + b for a, b in zip(cur, prod_vec)]
                states = new
    denom = scale**k
    return [Fraction(-x, denom) for x in acc]


def _default_region(exponents) -> tuple:
    return tuple(sorted(range(len(exponents)), key=lambda v: (exponents[v], v)))


def k_point_coefficient(l: int, exponents, region=None, degree: int | None = None) -> Poly:
    """Coefficient of prod lam_v^(e_v) in the k-point series, as a polynomial in n.

    ``region`` orders the variables by decreasing modulus; by default they
    are sorted by exponent, which gives the smallest search. ``degree`` is an
    upper bound for the degree in n (default: the rigorous bound -sum(e)-k);
    one extra sample point checks it.
    """
    e = tuple(int(x) for x in exponents)
    k = len(e)
    if k < 2:
        raise ValueError("use one_point for a single variable")
    if l < 2:
        raise ValueError("l must be at least 2")
    region = _default_region(e) if region is None else _check_region(k, region)
    total_power = -sum(e) - k
    if total_power < 0 and k != 2:
        return Poly()
    if degree is None:
        degree = max(total_power, 0)
    nodes = list(range(degree + 2))
    values = _trace_sum_at_nodes(l, e, region, nodes)
    if k == 2:
        big, small = region
        if e[small] >= 0 and e[big] == -e[small] - 2:
            values = [v - (l - 1) * (e[small] + 1) for v in values]
    poly = Poly.interpolate(nodes[:-1], values[:-1])
    if poly(nodes[-1]) != values[-1]:
        raise EngineError(f"coefficient at {e} exceeds degree {degree} in n")
    return poly


def k_point(l: int, k: int, b_max: int, region=None) -> MultiSeries:
    """All coefficients of the k-point series with every exponent >= -(b_max+1)."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if b_max < 1:
        raise ValueError("b_max must be at least 1")
    region = _check_region(k, region)
    floor = -(b_max + 1)
    terms = {}
    # shifted exponents f_v = e_v - floor >= 0 with sum(e) <= -k
    budget = -k - k * floor
    for shifted in _compositions_upto(k, budget):
        e = tuple(x + floor for x in shifted)
        c = k_point_coefficient(l, e, region)
        if c:
            terms[e] = c
    return MultiSeries(k, terms, (floor,) * k)


def _compositions_upto(k: int, budget: int):
    if k == 0:
        yield ()
        return
    for first in range(budget + 1):
        for rest in _compositions_upto(k - 1, budget - first):
            yield (first,) + rest


# ----------------------------------------------------------------- counts


def genus_bound(l: int, b) -> int:
    """Largest genus allowed for l-hypermaps with face degrees b (may be negative)."""
    k, d = len(b), sum(b)
    return ((l - 1) * d // l - k + 1) // 2


def top_exponent(l: int, b) -> int:
    return 2 - len(b) + (l - 1) * sum(b) // l


@dataclass(frozen=True)
class CountResult:
    l: int
    b: tuple
    poly_n: Poly
    by_genus: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "b": list(self.b),
            "poly_n": [[format_rational(c), e] for e, c in self.poly_n.terms()],
            "by_genus": {str(g): format_rational(v) for g, v in sorted(self.by_genus.items())},
        }


def split_by_genus(l: int, b, poly: Poly) -> dict:
    top = top_exponent(l, b)
    gmax = genus_bound(l, b)
    by_genus = {g: Fraction(0) for g in range(gmax + 1)}
    for e, c in poly.terms():
        g, odd = divmod(top - e, 2)
        if odd or not 0 <= g <= gmax:
            raise EngineError(f"n^{e} is not an admissible exponent for l={l}, b={tuple(b)}")
        by_genus[g] = c
    return by_genus


def count_poly(l: int, b) -> CountResult:
    """M_k(b; n) and its split into genus contributions."""
    if l < 2:
        raise ValueError("l must be at least 2")
    b = tuple(sorted(int(x) for x in b))
    if not b or min(b) < 1:
        raise ValueError("b must be a nonempty list of positive integers")
    d, k = sum(b), len(b)
    if d % l or genus_bound(l, b) < 0:
        return CountResult(l, b, Poly(), {})
    if k == 1:
        coeff = one_point(l, d + 1).coefficient(-(d + 1))
    else:
        coeff = k_point_coefficient(l, [-(x + 1) for x in b], degree=top_exponent(l, b))
    poly = coeff / prod(b)
    return CountResult(l, b, poly, split_by_genus(l, b, poly))

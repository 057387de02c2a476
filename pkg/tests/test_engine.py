from fractions import Fraction

import pytest

from hypermaps.engine import (
    count_poly,
    f_func,
    f_func_l2,
    genus_bound,
    genus_closed,
    k_point,
    k_point_coefficient,
    k_point_series,
    m_matrix,
    one_point,
    one_point_curve,
    one_point_explicit,
    special_two_point_series,
    split_by_genus,
    top_genus,
    two_point_explicit,
    verify_psiB_wave,
    y_block,
    y_entry,
    y_entry_curve,
    zagier_t_formula,
    zagier_Y_check,
)
from hypermaps.errors import EngineError
from hypermaps.exact import Poly, TruncationError, pochhammer

N = Poly.gen()


# ----------------------------------------------------------- resolvent


@pytest.mark.parametrize("l", [2, 3, 4])
def test_y_entry_leading_block(l):
    for i in range(1, l + 1):
        for j in range(l):
            if (i, j) == (l, 0):
                continue
            series = y_entry(l, i, j, 3 * l).series
            assert series.coefficient(i - j - l) == pochhammer(N + 1 - j, l - 1 - i + j)


def test_y_block_value():
    assert y_block(3, 3, 0, 1) == (2 * N, 0)
    assert y_block(3, 3, 0, 0) == (Poly(), 1)


def test_y_entry_one_over_n_part():
    assert y_entry_curve(4, 4, 0, 8).inverse_n == 1
    assert y_entry_curve(4, 3, 0, 8).inverse_n == 0


@pytest.mark.parametrize("l", [2, 3, 4, 5])
def test_n_times_y_agrees_with_curve_form(l):
    for i in range(1, l + 1):
        for j in range(l):
            assert y_entry(l, i, j, 4 * l).times_n() == y_entry_curve(l, i, j, 4 * l).times_n()


def test_matrix_entries():
    mat = m_matrix(3, 6)
    assert mat.entry(1, 3).coefficient(-2) == -(N**2) - N
    assert mat.entry(1, 1).coefficient(0) == Poly.const(1)
    with pytest.raises(TruncationError):
        mat.entry(1, 1).coefficient(-7)


@pytest.mark.parametrize("l", [2, 3, 4, 5, 6])
def test_trace_at_lam_zero(l):
    # the constant terms are 1 on the diagonal except (l, l), where -n/n cancels it
    assert m_matrix(l, 2 * l).trace().coefficient(0) == Poly.const(l - 1)


# ----------------------------------------------------------- one point


def test_one_point_values():
    s = one_point(3, 7)
    assert s.coefficient(-4) == N**3 + N
    assert s.coefficient(-2).is_zero()
    assert s.coefficient(-7) == 3 * N**5 + 25 * N**3 + 12 * N
    assert one_point(2, 3).coefficient(-3) == N**2


def test_one_point_order_precondition():
    with pytest.raises(ValueError):
        one_point(3, 3)


@pytest.mark.parametrize("l", [2, 3, 4, 5])
def test_one_point_curve_form(l):
    assert one_point(l, 5 * l + 1) == one_point_curve(l, 5 * l + 1)
    assert one_point_curve(l, l + 1, include_unstable=True).coefficient(-1) == N


def test_one_point_curve_l3_term():
    from hypermaps.curve import ctilde_as_poly_in_n

    assert ctilde_as_poly_in_n(2, 0, 0, 3) * Fraction(3, 4) == N**3 + N


# ----------------------------------------------------------- k point


def test_k_point_two_variable_values():
    assert k_point_coefficient(3, (-2, -3)) == 2 * N**2
    assert k_point_coefficient(3, (-3, -2)) == 2 * N**2
    # positive and -1 exponents cancel, including the double-pole correction
    assert k_point_coefficient(3, (-5, 1)).is_zero()
    assert k_point_coefficient(3, (1, -5)).is_zero()
    assert k_point_coefficient(4, (-1, -3)).is_zero()


def test_k_point_literal_and_extraction_agree():
    assert k_point_series(3, 2, 6) == k_point(3, 2, 6)
    assert k_point_series(5, 3, 3) == k_point(5, 3, 3)
    assert k_point_series(3, 2, 4, slack=3) == k_point_series(3, 2, 4)


def test_k_point_region_choice():
    e = (-4, -4, -5)
    base = k_point_coefficient(5, e)
    for region in [(0, 1, 2), (2, 1, 0), (1, 2, 0)]:
        assert k_point_coefficient(5, e, region) == base


def test_k_point_degree_check_raises():
    with pytest.raises(EngineError):
        k_point_coefficient(3, (-8, -9), degree=2)


def test_k_point_series_below_floor():
    s = k_point(3, 2, 3)
    with pytest.raises(TruncationError):
        s.coefficient((-5, -2))


# ----------------------------------------------------------- counts


@pytest.mark.parametrize(
    "l,b,poly",
    [
        (3, (7, 8), 7 * N**2 * (9 * N**8 + 600 * N**6 + 11077 * N**4 + 55050 * N**2 + 47664)),
        (4, (2, 6), Fraction(5, 2) * N**2 * (N**4 + 16 * N**2 + 25)),
        (5, (3, 3, 4), 8 * N * (2 * N**6 + 43 * N**4 + 161 * N**2 + 46)),
        (6, (1, 3, 3, 5), 40 * N**2 * (5 * N**6 + 205 * N**4 + 1612 * N**2 + 1866)),
    ],
)
def test_polynomial_anchors(l, b, poly):
    assert count_poly(l, b).poly_n == poly


def test_count_examples():
    assert count_poly(5, (1, 2, 2)).by_genus[0] == 4
    assert count_poly(3, (3, 3, 3)).by_genus == {0: 8, 1: Fraction(152, 3), 2: 16}
    zero = count_poly(3, (2,))
    assert zero.poly_n.is_zero() and zero.by_genus == {}
    assert count_poly(3, (1, 1, 1)).by_genus == {0: 2}
    assert count_poly(4, (1, 1, 1, 1)).by_genus == {0: 6}


def test_count_result_json():
    data = count_poly(3, (3, 3)).to_json()
    assert data == {"l": 3, "b": [3, 3], "poly_n": [["3", 2], ["1", 4]], "by_genus": {"0": "1", "1": "3"}}


def test_split_by_genus_rejects_bad_exponent():
    with pytest.raises(EngineError):
        split_by_genus(3, (3, 3), N**3)


def test_genus_bound():
    assert genus_bound(3, (3, 3, 3)) == 2
    assert genus_bound(2, (1,) * 6) < 0


# ----------------------------------------------------------- closed formulas


def test_f_func():
    assert f_func(N, 1, 0, 3) == Poly.const(1)
    assert f_func(N - 1, 5, 1, 3) / 4 == N**3 + N
    assert f_func(N, 3, Fraction(1, 2), 3).is_zero()
    assert f_func(N, 3, -1, 3).is_zero()
    with pytest.raises(ValueError):
        f_func(N, 0, 1, 3)


@pytest.mark.parametrize("i", range(-2, 6))
def test_f_func_binomial_form(i):
    for j in range(1, 6):
        for p in range(4):
            assert f_func(i, j, p, 2) == f_func_l2(i, j, p)


def test_one_point_explicit():
    assert one_point_explicit(3, 2) == N**3 + N
    assert one_point_explicit(4, 3) == N**4 + 5 * N**2
    assert one_point_explicit(3, 3).is_zero()
    for l in (2, 3, 4, 5):
        s = one_point(l, 4 * l + 1)
        for a in range(4 * l):
            assert one_point_explicit(l, a) == s.coefficient(-(a + 2))


def test_two_point_explicit_examples():
    assert two_point_explicit(3, 6, 7) == 56 * count_poly(3, (7, 8)).poly_n
    assert two_point_explicit(3, 2, 2) == 9 * N**4 + 27 * N**2
    assert two_point_explicit(3, 0, 0).is_zero()


@pytest.mark.parametrize("l", [2, 3, 4])
def test_two_point_explicit_matches_extraction(l):
    for a in range(11):
        for b in range(11 - a):
            assert two_point_explicit(l, a, b) == k_point_coefficient(l, (-(a + 2), -(b + 2)))


def test_genus_closed_examples():
    assert genus_closed(3, 0, 1) == 1
    assert genus_closed(3, 1, 1) == 1
    assert genus_closed(4, 2, 1) == 0
    with pytest.raises(NotImplementedError):
        genus_closed(3, 4, 2)


def test_top_genus_examples():
    assert top_genus(5, 1) == 8
    assert top_genus(2, 2) == 1
    assert top_genus(3, 2) == 12
    with pytest.raises(ValueError):
        top_genus(4, 1)


def test_zagier_t_examples():
    assert zagier_t_formula(3, 1, 1) == 1
    # g = 3 is the top genus at l = 3, m = 3; 9 * M_{3,1}(9) = 9 * 464/9
    assert zagier_t_formula(3, 3, 3) == 464
    assert count_poly(3, (9,)).by_genus[3] == Fraction(464, 9)


@pytest.mark.parametrize("l", range(2, 11))
def test_closed_formulas_against_series(l):
    mmax = 20 // l
    s = one_point(l, l * mmax + 1)
    for m in range(1, mmax + 1):
        coeff = s.coefficient(-(l * m + 1))
        for g in range(4):
            top = 1 - 2 * g + (l - 1) * m
            if top < 0:
                continue
            assert coeff.coeff(top) == genus_closed(l, g, m) == zagier_t_formula(l, m, g)
        if (l - 1) * m % 2 == 0:
            assert coeff.coeff(1) == top_genus(l, m)


def test_zagier_y_check():
    report = zagier_Y_check(3, 1, 2)
    assert report.passed
    assert report.checks[1].detail == "10 vs 10"
    for l in (2, 3, 4):
        for m in (1, 2, 3):
            assert zagier_Y_check(l, m, 6).passed


@pytest.mark.parametrize("l", [2, 3, 4])
def test_special_two_point_series(l):
    report = special_two_point_series(l, 11)
    assert report.passed
    labels = {c.label for c in report.checks}
    assert "b=8" in labels


def test_special_two_point_value_l4():
    report = special_two_point_series(4, 9)
    check = next(c for c in report.checks if c.label == "b=6")
    expected = 12 * Fraction(5, 2) * N**2 * (N**4 + 16 * N**2 + 25)
    assert check.detail == f"{expected} vs {expected}"


@pytest.mark.parametrize("l", [2, 3, 4])
def test_psi_b_wave(l):
    assert verify_psiB_wave(l, 4).passed

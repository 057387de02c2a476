"""Resolvent matrix, generating series and counts of l-hypermaps."""

from .closed import (
    f_func,
    f_func_l2,
    genus_closed,
    one_point_explicit,
    special_two_point_series,
    top_genus,
    two_point_explicit,
    verify_psiB_wave,
    zagier_t_formula,
    zagier_Y_check,
)
from .points import (
    CountResult,
    count_poly,
    genus_bound,
    k_point,
    k_point_coefficient,
    k_point_series,
    one_point,
    one_point_curve,
    split_by_genus,
    top_exponent,
)
from .resolvent import ResolventMatrix, YEntry, m_matrix, shift_entry, y_block, y_entry, y_entry_curve

__all__ = [
    "CountResult",
    "ResolventMatrix",
    "YEntry",
    "count_poly",
    "f_func",
    "f_func_l2",
    "genus_bound",
    "genus_closed",
    "k_point",
    "k_point_coefficient",
    "k_point_series",
    "m_matrix",
    "one_point",
    "one_point_curve",
    "one_point_explicit",
    "shift_entry",
    "special_two_point_series",
    "split_by_genus",
    "top_exponent",
    "top_genus",
    "two_point_explicit",
    "verify_psiB_wave",
    "y_block",
    "y_entry",
    "y_entry_curve",
    "zagier_t_formula",
    "zagier_Y_check",
]

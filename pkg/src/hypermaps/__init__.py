"""Exact enumeration of l-hypermaps through matrix-resolvent generating series."""

from .engine import CountResult, count_poly, k_point, k_point_coefficient, m_matrix, one_point
from .errors import EngineError, OracleCapError, ResourceError, TruncationError
from .exact import Fraction, LaurentSeries, MultiSeries, Poly
from .oracle import HypermapSpec, brute_count, hurwitz_strict
from .report import Check, Report

__version__ = "0.1.0"

__all__ = [
    "Check",
    "CountResult",
    "EngineError",
    "Fraction",
    "HypermapSpec",
    "LaurentSeries",
    "MultiSeries",
    "OracleCapError",
    "Poly",
    "Report",
    "ResourceError",
    "TruncationError",
    "brute_count",
    "count_poly",
    "hurwitz_strict",
    "k_point",
    "k_point_coefficient",
    "m_matrix",
    "one_point",
]

"""Brute-force counts over permutations, used to cross-check the engine."""

from .brute import HypermapSpec, brute_count, brute_count_reference, genus_from_cycles, uniform_class_size
from .hurwitz import check_duality, check_mgk_hurwitz, hurwitz_strict, mgk_from_hurwitz
from .permutation import Permutation, canonical, class_size, iter_class, transitivity

__all__ = [
    "HypermapSpec",
    "Permutation",
    "brute_count",
    "brute_count_reference",
    "canonical",
    "check_duality",
    "check_mgk_hurwitz",
    "class_size",
    "genus_from_cycles",
    "hurwitz_strict",
    "iter_class",
    "mgk_from_hurwitz",
    "transitivity",
    "uniform_class_size",
]

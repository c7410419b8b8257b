"""Descending plane partitions, alternating sign matrices, and a
statistic-preserving bijection between permutations and DPPs without
special parts."""

from .bijection import check_preservation, dpp_to_perm, perm_to_dpp
from .model import (
    Asm,
    Dpp,
    InversionWord,
    Permutation,
    StatQuadruple,
    asm_inversions,
    asm_stats,
    dpp_stats,
    inversion_word,
    matrix_to_perm,
    perm_inversions,
    perm_to_matrix,
    special_positions,
    validate_asm,
    validate_dpp,
    validate_permutation,
    validate_word,
    word_to_perm,
)
from .paths import LatticePath, PathFamily, check_nonintersecting, dpp_to_paths, paths_to_dpp

__version__ = "0.1.0"

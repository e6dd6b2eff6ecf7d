"""Exact counting of permutation factorizations into transpositions."""

from .partitions import (enumerate_partitions, PartitionIndex, conjugate,
                         z_value, class_size, rho, hook_lengths,
                         parity_census, DEFAULT_MAX_N)
from .transition import (build_transition_matrix, build_raw_counts,
                         verify_matrix_equality, matrix_power_apply,
                         zero_multiplicity_lower_bound)
from .characters import (mn_character, enumerate_bst, bst_signed_count,
                         dimension_hook_formula, build_character_table,
                         CharacterTable)
from .counting import (count_spectral, count_matrix_method, count_goulden,
                       count_two_cycle, two_cycle_terms, series_prefix,
                       SeriesPrefix)
from .oracle import (cycle_type, count_brute, count_tuples, verify_cut_glue,
                     verify_class_invariance)
from .symfun import (Poly, power_sum, expand_p, schur_from_characters,
                     apply_dstar, matrix_of_dstar, omega_on_p, schur_p_coords)
from .verify import run_battery

__version__ = "0.1.0"

__all__ = [
    "enumerate_partitions", "PartitionIndex", "conjugate", "z_value",
    "class_size", "rho", "hook_lengths", "parity_census", "DEFAULT_MAX_N",
    "build_transition_matrix", "build_raw_counts", "verify_matrix_equality",
    "matrix_power_apply", "zero_multiplicity_lower_bound",
    "mn_character", "enumerate_bst", "bst_signed_count",
    "dimension_hook_formula", "build_character_table", "CharacterTable",
    "count_spectral", "count_matrix_method", "count_goulden",
    "count_two_cycle", "two_cycle_terms", "series_prefix", "SeriesPrefix",
    "cycle_type", "count_brute", "count_tuples", "verify_cut_glue",
    "verify_class_invariance",
    "Poly", "power_sum", "expand_p", "schur_from_characters", "apply_dstar",
    "matrix_of_dstar", "omega_on_p", "schur_p_coords",
    "run_battery",
]

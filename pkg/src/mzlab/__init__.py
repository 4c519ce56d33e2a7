"""Exact arithmetic for multiple-zeta-style sums and their relations.

The package expands any admissible index over the indices with all entries
at least 2 (with integer coefficients) and verifies the identities behind
that expansion bit-exactly at finite truncation.
"""

from .algebra import (
    Poly,
    WordCombo,
    circled_product,
    harmonic_product,
    interpolate,
    phi,
    star_harmonic_product,
    star_sum,
)
from .expander import (
    drop_ones,
    expand_index,
    expand_interpolated,
    normal_form,
    reduces_to_zero,
)
from .indices import (
    DomainError,
    classify,
    coarsenings,
    composition_to_index,
    composition_to_word,
    enumerate_class,
    hoffman_dual,
    index_stats,
    index_to_composition,
    index_to_word,
    mzv_dual,
    remove_and_subtract,
    subset_families,
    word_to_composition,
    word_to_index,
)
from .sums import (
    F_kawashima,
    G_kawashima,
    G_series,
    T_SAMPLES,
    TruncatedSeries,
    connected_sum,
    connected_sum_up,
    connector,
    difference_check,
    eval_F,
    eval_Z_dia,
    eval_Z_h,
    f_g_h,
    zeta_dia,
    zeta_dia_flat,
    zeta_dia_param,
    zeta_dia_star,
    zeta_flat,
    zeta_flat_tworow,
    zeta_float,
    zeta_n,
    zeta_tworow,
)

__version__ = "0.1.0"

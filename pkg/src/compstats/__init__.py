"""compstats: exact distributions of inversions and descents over integer compositions.

Closed forms (hook-length sums, q-Eulerian partition sums, truncated
generating functions) together with the exhaustive enumerations that verify
them, all over arbitrary-precision integer arithmetic.
"""

from .polynomial import Poly, Series, divexact, geometric_series
from .qanalog import (
    check_q_exponential_inverse,
    gaussian_binomial,
    pochhammer_inverse_series,
    q_factorial,
    q_int,
    q_pochhammer,
)
from .partitions import (
    b_statistic,
    enumerate_standard_tableaux,
    hook_lengths,
    partitions_of,
    partitions_of_length,
    q_eulerian_weight,
    syt_count,
    syt_count_q,
    tableau_major_index,
)
from .permutations import (
    all_permutations,
    foata,
    foata_inverse,
    inverse_permutation,
    permutation_stats,
)
from .compositions import (
    composition_stats,
    compositions_of,
    macmahon_forward,
    macmahon_inverse,
    reversed_composition,
    sorting_permutation,
)
from .distributions import (
    DistTable,
    comaj_des_gf,
    des_gf,
    des_gf_total,
    des_gf_total_rational,
    inv_gf,
    inv_gf_recurrence,
    inv_gf_total,
    inversion_totals,
    joint_gf,
    maj_inv_poly,
    maj_inv_poly_carlitz,
    q_eulerian_poly,
    verify_composition_count_identity,
    verify_product_expansion,
    verify_q_eulerian_gf,
)

__all__ = [
    "Poly", "Series", "divexact", "geometric_series",
    "check_q_exponential_inverse", "gaussian_binomial",
    "pochhammer_inverse_series", "q_factorial", "q_int", "q_pochhammer",
    "b_statistic", "enumerate_standard_tableaux", "hook_lengths",
    "partitions_of", "partitions_of_length", "q_eulerian_weight",
    "syt_count", "syt_count_q", "tableau_major_index",
    "all_permutations", "foata", "foata_inverse", "inverse_permutation",
    "permutation_stats",
    "composition_stats", "compositions_of", "macmahon_forward",
    "macmahon_inverse", "reversed_composition", "sorting_permutation",
    "DistTable", "comaj_des_gf", "des_gf", "des_gf_total",
    "des_gf_total_rational", "inv_gf", "inv_gf_recurrence", "inv_gf_total",
    "inversion_totals", "joint_gf", "maj_inv_poly", "maj_inv_poly_carlitz",
    "q_eulerian_poly", "verify_composition_count_identity",
    "verify_product_expansion", "verify_q_eulerian_gf",
]

__version__ = "0.1.0"

"""Exact counting of 3-core partitions, pairs, and triples.

Four independent routes to the same integers: Euler-product series
expansion, folded Lambert sums, closed-form divisor/factorization
formulas, and brute-force hook-length enumeration -- plus a harness that
verifies the arithmetic identity and congruence families tying them
together.
"""

__version__ = "0.1.0"

from .arith import (
    Factorization,
    SpfSieve,
    core_count,
    core_count_product,
    divisor_count_mod3,
    factorize,
    pair_count,
    sigma,
    triple_count,
    weighted_divisor_sum,
    weighted_divisor_sum_prime_power,
)
from .identities import (
    IdentityReport,
    XiaParams,
    check_A3_relations,
    check_A3_residue_families,
    check_B3_relations,
    check_B3_residue_families,
    check_a3_even_power,
    check_b3_power_families,
    check_baruah_nath,
    check_lin,
    check_xia_congruences,
    check_xia_conjecture,
    cross_validate,
)
from .lambert import (
    core_series,
    pair_fold_cross_term,
    pair_series,
    square_kernel_check,
    triple_series,
)
from .partitions import (
    Partition,
    brute_core_count,
    brute_tuple_count,
    enumerate_partitions,
    hook_lengths,
    is_t_core,
)
from .series import (
    TruncatedSeries,
    core_tuple_series,
    div,
    euler_product,
    from_coeffs,
    monomial,
    mul,
    one,
    verify_q_split,
)

__all__ = [
    "Factorization",
    "IdentityReport",
    "Partition",
    "SpfSieve",
    "TruncatedSeries",
    "XiaParams",
    "brute_core_count",
    "brute_tuple_count",
    "check_A3_relations",
    "check_A3_residue_families",
    "check_B3_relations",
    "check_B3_residue_families",
    "check_a3_even_power",
    "check_b3_power_families",
    "check_baruah_nath",
    "check_lin",
    "check_xia_congruences",
    "check_xia_conjecture",
    "core_count",
    "core_count_product",
    "core_series",
    "core_tuple_series",
    "cross_validate",
    "div",
    "divisor_count_mod3",
    "enumerate_partitions",
    "euler_product",
    "factorize",
    "from_coeffs",
    "hook_lengths",
    "is_t_core",
    "monomial",
    "mul",
    "one",
    "pair_count",
    "pair_fold_cross_term",
    "pair_series",
    "sigma",
    "square_kernel_check",
    "triple_count",
    "triple_series",
    "verify_q_split",
    "weighted_divisor_sum",
    "weighted_divisor_sum_prime_power",
]

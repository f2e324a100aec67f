"""Non-consecutive Lucas and Fibonacci partitions (C++ core)."""

from ._core import (  # noqa: F401
    RecurrenceSpec,
    __version__,
    achievable_sums,
    alpha,
    b_count,
    beta_of,
    c_of,
    canonical_partition,
    contains_summand,
    enumerate_partitions,
    error_bound_check,
    fibonacci,
    fibonacci_zeckendorf,
    floor_div_phi,
    golden_char,
    golden_prefix,
    k_set,
    lucas,
    max_partition_count,
    q_sequence,
    term,
    verify_gap_lemma,
    verify_lemma3,
    verify_lemma5,
    z_set,
)

"""
stacktier: multi-pass stack sorting of permutations.

A permutation runs through a stack that only ever pops the next value
the sorted output needs; whatever is left restarts the process.  The
number of extra passes needed (the *tier*) equals the permutation's
count of separated pairs, the k-pass sortable permutations form classes
with small finite bases, and the tier distribution is counted exactly
by a bijection onto bounded integer sequences, by an insertion
recurrence, and by a tower of nested-radical generating functions.
"""
from ._backend import backend_name, get_backend
from .basis import (
    BASIS_TIER_0,
    BASIS_TIER_1,
    Basis,
    avoids_basis,
    basis_length_counts,
    compute_basis,
    is_k_pass_sortable,
)
from .machine import (
    Pass,
    SortTrace,
    render_trace,
    run_single_pass,
    sort_with_trace,
    tier_by_simulation,
)
from .parker import (
    ParkerSequence,
    descent_count,
    descent_histogram,
    descents,
    enumerate_parker,
    format_parker,
    is_parker,
    parker_to_perm,
    parse_parker,
    perm_to_parker,
)
from .perm import (
    Decomposition,
    Permutation,
    SeparatedPair,
    contains_pattern,
    delete_entry,
    direct_sum,
    format_permutation,
    maximal_intervals,
    minus_combine,
    minus_decompose,
    parse_permutation,
    plus_combine,
    plus_decompose,
    separated_pair_count,
    separated_pairs,
    skew_sum,
    standardize,
)
from .series import (
    RationalSeries,
    catalan_series,
    psi_tower,
    t1_closed_form,
    t2_closed_form,
    t_coefficient,
    t_series,
)
from .tables import (
    PositionTable,
    TierTable,
    catalan_number,
    cumulative,
    table_bruteforce,
    table_gf,
    table_recurrence,
)
from .tiers import (
    max_tier,
    max_tier_floor_sum,
    max_tier_recursive,
    max_tier_witness,
    tier,
    tier_of_minus_chain,
)

__version__ = "0.1.0"

__all__ = [
    "BASIS_TIER_0",
    "BASIS_TIER_1",
    "Basis",
    "Decomposition",
    "ParkerSequence",
    "Pass",
    "Permutation",
    "PositionTable",
    "RationalSeries",
    "SeparatedPair",
    "SortTrace",
    "TierTable",
    "avoids_basis",
    "backend_name",
    "basis_length_counts",
    "catalan_number",
    "catalan_series",
    "compute_basis",
    "contains_pattern",
    "cumulative",
    "delete_entry",
    "descent_count",
    "descent_histogram",
    "descents",
    "direct_sum",
    "enumerate_parker",
    "format_parker",
    "format_permutation",
    "get_backend",
    "is_k_pass_sortable",
    "is_parker",
    "max_tier",
    "max_tier_floor_sum",
    "max_tier_recursive",
    "max_tier_witness",
    "maximal_intervals",
    "minus_combine",
    "minus_decompose",
    "parker_to_perm",
    "parse_parker",
    "parse_permutation",
    "perm_to_parker",
    "plus_combine",
    "plus_decompose",
    "psi_tower",
    "render_trace",
    "run_single_pass",
    "separated_pair_count",
    "separated_pairs",
    "skew_sum",
    "sort_with_trace",
    "standardize",
    "t1_closed_form",
    "t2_closed_form",
    "t_coefficient",
    "t_series",
    "table_bruteforce",
    "table_gf",
    "table_recurrence",
    "tier",
    "tier_by_simulation",
    "tier_of_minus_chain",
]

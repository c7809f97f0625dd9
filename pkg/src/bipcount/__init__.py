"""Exact counting of binary matrices up to row/column permutation."""

from .cycleindex import (
    CycleIndex,
    Monomial,
    boxtimes,
    boxtimes_monomial,
    cycle_index_by_recurrence,
    cycle_index_symmetric,
    evaluate,
)
from .oracle import burnside_count_explicit, orbit_count
from .partitions import (
    CycleType,
    binomial,
    generate_cycle_types,
    identity_type,
    partition_count,
    permutation_count,
    transposition_type,
)
from .polya import (
    BoundsResult,
    CountResult,
    RegimeError,
    bounds,
    count_matrix_classes,
    general_term_value,
    lower_bound,
    second_term_value,
    uniform_substitution_closed_form,
    upper_bound,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsResult",
    "CountResult",
    "CycleIndex",
    "CycleType",
    "Monomial",
    "RegimeError",
    "binomial",
    "bounds",
    "boxtimes",
    "boxtimes_monomial",
    "burnside_count_explicit",
    "count_matrix_classes",
    "cycle_index_by_recurrence",
    "cycle_index_symmetric",
    "evaluate",
    "general_term_value",
    "generate_cycle_types",
    "identity_type",
    "lower_bound",
    "orbit_count",
    "partition_count",
    "permutation_count",
    "second_term_value",
    "transposition_type",
    "uniform_substitution_closed_form",
    "upper_bound",
]

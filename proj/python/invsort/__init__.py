"""Sorting machines, pattern avoidance, and generating trees over words and
inversion sequences."""

from ._invsort import (
    avoids_all,
    burstein_depth2_stack_words,
    burstein_gf_coefficient,
    cake,
    catalan,
    contains,
    count_avoiders,
    count_by_layer_number,
    count_depth_pop_sortable,
    decode,
    encode,
    enumerate_universe,
    eulerian,
    fibonacci,
    is_inversion_sequence,
    is_sortable,
    is_sorted,
    layer_count,
    layer_decomposition,
    level_counts,
    machine_basis,
    occurrence_count,
    ruleset_basis,
    sort_with_machine,
    sortable_by_search,
    tetrahedral,
    wd_count,
)

__version__ = "0.1.0"

__all__ = [
    "avoids_all",
    "burstein_depth2_stack_words",
    "burstein_gf_coefficient",
    "cake",
    "catalan",
    "contains",
    "count_avoiders",
    "count_by_layer_number",
    "count_depth_pop_sortable",
    "decode",
    "encode",
    "enumerate_universe",
    "eulerian",
    "fibonacci",
    "is_inversion_sequence",
    "is_sortable",
    "is_sorted",
    "layer_count",
    "layer_decomposition",
    "level_counts",
    "machine_basis",
    "occurrence_count",
    "ruleset_basis",
    "sort_with_machine",
    "sortable_by_search",
    "tetrahedral",
    "wd_count",
]

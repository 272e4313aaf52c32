"""Exact enumeration of words over a finite totally ordered alphabet that
avoid sets of generalized (dashed) patterns.

The library provides several independently implemented counting routes:
brute-force enumeration with incremental pruning, an insertion construction
on reduced words, succession rules run as generating trees, a state-space
dynamic program, exact integer generating functions, and closed formulas,
all of which can be cross-checked against one another (see the ``verify``
CLI subcommand).
"""

from .words import (
    Word,
    all_embeddings,
    alphabet_span,
    embed,
    format_word,
    is_reduced,
    order_isomorphic,
    parse_word,
    reduce_word,
    shift_up,
)
from .patterns import (
    DashedPattern,
    PatternSet,
    avoids,
    find_occurrence,
    is_type_12,
    occurs,
    occurs_ending_at_last,
    parse_pattern,
    parse_pattern_set,
    pattern_set_id,
)
from .counting import (
    AlphaMatrix,
    alpha_table,
    brute_force_total,
    enumerate_reduced,
    lifted_total,
    sons,
    state_count,
)
from .succession import (
    Label,
    SuccessionRule,
    alpha_from_tree,
    alpha_table_from_tree,
    eco_matrix,
    eco_matrix_csv,
    levels,
    rule_1_11__1_12,
    rule_1_12__2_21,
    rule_1_21__2_12,
)
from .series import (
    binomial,
    c_column,
    c_poly,
    c_poly_explicit,
    f_k_1_11__1_12,
    falling_factorial,
    falling_factorial_poly,
    gf_1_11__1_21,
    gf_1_11__1_22,
    gf_2_11__1_22,
    gf_total_1_11__1_12,
    series_inverse_product,
)
from .closedforms import (
    alpha_1_12__2_21,
    alpha_1_21__2_12,
    arrangements_level_poly,
    count_by_k_1_12__2_21,
    total_1_12__2_21,
    total_1_21__2_12,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaMatrix",
    "DashedPattern",
    "Label",
    "PatternSet",
    "SuccessionRule",
    "Word",
    "all_embeddings",
    "alpha_1_12__2_21",
    "alpha_1_21__2_12",
    "alpha_from_tree",
    "alpha_table",
    "alpha_table_from_tree",
    "alphabet_span",
    "arrangements_level_poly",
    "avoids",
    "binomial",
    "brute_force_total",
    "c_column",
    "c_poly",
    "c_poly_explicit",
    "count_by_k_1_12__2_21",
    "eco_matrix",
    "eco_matrix_csv",
    "embed",
    "enumerate_reduced",
    "f_k_1_11__1_12",
    "falling_factorial",
    "falling_factorial_poly",
    "find_occurrence",
    "format_word",
    "gf_1_11__1_21",
    "gf_1_11__1_22",
    "gf_2_11__1_22",
    "gf_total_1_11__1_12",
    "is_reduced",
    "is_type_12",
    "levels",
    "lifted_total",
    "occurs",
    "occurs_ending_at_last",
    "order_isomorphic",
    "parse_pattern",
    "parse_pattern_set",
    "parse_word",
    "pattern_set_id",
    "reduce_word",
    "rule_1_11__1_12",
    "rule_1_12__2_21",
    "rule_1_21__2_12",
    "series_inverse_product",
    "shift_up",
    "sons",
    "state_count",
    "total_1_12__2_21",
    "total_1_21__2_12",
]

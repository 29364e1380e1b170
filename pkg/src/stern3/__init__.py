"""Exact arithmetic for the Stern triatomic sequence and its surroundings:
integer addressing, the triple recursion, the matrix and generating-series
routes, the Farey map on the triangle, occurrence-count analytics, the
subdivision path-count graph, and the classical two-term baseline."""

from .analytics import (
    Check,
    DeltaTable,
    compare_reference_table,
    delta_table,
    induced_triples,
    level_sum,
    tribonacci_subsequence,
    verify_delta_identities,
    verify_threefold,
)
from .diatomic import diatomic_matrix_term, diatomic_term, diatomic_terms, stern_bits
from .farey import (
    OutOfDomain,
    RationalPoint,
    ZeroDenominator,
    apply_map,
    classify,
    cone_contains,
    expand,
    in_subtriangle,
    project,
)
from .indexing import IndexTuple, decode, encode, level_of, level_range, parent_positions
from .matrices import (
    DIGIT_MATRICES,
    VERTEX_MATRIX,
    IntSeries,
    bottom_row,
    digit_matrix,
    product_over,
    series_coefficients,
)
from .sequence import (
    UNIT_SEED,
    Triple,
    child_triple,
    level_terms,
    level_triples,
    term,
    terms,
    triple_of,
)
from .subgraph import SubdivisionGraph, VertexNotBuilt, build, count_paths_brute, path_count

__version__ = "0.1.0"

"""Graph reductions over GF(2) for the gene-assembly graph model.

Graphs are simple graphs with loops (a loop marks a positive vertex).  The
package covers reducibility and reduction along vertex sets, the three
combinatorial rules, rank and nullity, reducibility posets, pivots and
pair-classes, retrographs, reverse reductions and parallel complexity.
"""

from .gf2 import (
    BitMatrix,
    MatrixFormatError,
    format_matrix,
    inverse,
    nullspace_basis,
    parse_matrix,
    rank,
    rref,
    solve_right,
    submatrix,
)
from .graph import (
    Graph,
    GraphError,
    LegalStringError,
    UnknownVertexError,
    format_graph,
    from_legal_string,
    from_signed_edges,
    induced_subgraph,
    nullity_of,
    parse_graph,
    parse_graphs,
    rank_of,
)
from .parallel import (
    CensusReport,
    applies_in_parallel,
    format_census,
    gdr_parallel_census,
    parallel_complexity,
    parallel_complexity_census,
    parallel_gdr_check,
)
from .pivot import (
    PairClass,
    pairclass_nullity,
    pairclass_of,
    pivot_graph,
    pivot_matrix,
    pivot_pairclass,
    retrograph,
    reverse_reductions,
    schur_inverse_check,
)
from .poset import (
    ReducibilityPoset,
    format_poset,
    graph_from_pivotal_poset,
    hasse_cover_pairs,
    is_realizable,
    parse_poset,
    pivotal_poset,
    reducibility_poset,
)
from .reduction import (
    NotReducibleError,
    Rule,
    RuleNotApplicableError,
    StrategyError,
    applicable_rules,
    apply_rule,
    apply_strategy,
    avoids_gnr,
    edge_after_reduction,
    format_strategy,
    gnr_count,
    is_reducible,
    parse_strategy,
    reduce,
    strategy_for,
)

__version__ = "0.1.0"

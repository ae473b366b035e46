"""ekrlab: exact verification of EKR properties for independent set families."""

from .graphs import (
    Graph,
    GraphInputError,
    CapacityError,
    bits,
    mask_of,
    delete_vertex,
    delete_vertices,
    delete_closed_neighborhood,
    disjoint_union,
    degree,
    parse_edge_list,
    format_edge_list,
)
from .generators import (
    ChainSpec,
    GraphSpec,
    build_graph,
    is_special_chain,
    ladder_vertex,
    make_chain,
    make_complete,
    make_cycle,
    make_cycle_power,
    make_empty,
    make_gtk,
    make_ladder,
    make_mnd,
    make_modified_cycle_power,
    make_multipartite,
    make_path,
    make_path_power,
    make_spider2,
    make_tree_from_prufer,
    parse_graph_spec,
    prufer_sequence,
)
from .chordal import (
    EliminationOrder,
    find_domination_pair,
    find_elimination_order,
    is_chordal,
    is_simplicial,
)
from .independence import (
    SetFamily,
    alpha,
    best_star,
    enumerate_independent,
    family,
    mu,
    star,
    star_sizes,
)
from .solver import (
    BudgetExceeded,
    EkrReport,
    MaxFamilyResult,
    is_r_ekr,
    is_strict_r_ekr,
    max_intersecting_family,
)
from .decompose import (
    CompressionSplit,
    ContractionSplit,
    InternalCheckError,
    LadderReport,
    compress_family,
    contract_clique,
    contract_clique_split,
    contraction_closure_violations,
    replay_ladder_decomposition,
)
from .scans import (
    ScanResult,
    check_gtk_gap,
    check_gtk_higher_r,
    chordal_singleton_corpus,
    default_minmax_corpus,
    distinct_trees,
    labeled_trees,
    scan_degree_sort,
    scan_gtk_grid,
    scan_leaf_star,
    scan_minmax_conjecture,
    tree_spec,
)
from .kernel import BACKEND, DEFAULT_NODE_BUDGET, SOLVER_VERSION

__version__ = "0.1.0"

"""Exact maximum k-clique search with a lazy global domination rule."""

from kclique.graph import (
    Graph,
    GraphTooLarge,
    ParseError,
    Permutation,
    density,
    generate_gnp,
    parse_dimacs,
    parse_edge_list,
    permute_by_degree,
    write_dimacs,
    write_edge_list,
)
from kclique.power import bounded_bfs, is_saturated, power_graph
from kclique.solver import (
    ColourOrder,
    DominationCache,
    SearchStats,
    Solution,
    SolverOptions,
    colour_order,
    dominated_by,
    dominated_set,
    solve_max_clique,
    solve_max_k_clique,
)
from kclique.oracle import (
    OracleLimitError,
    all_pairs_distances,
    unreachable,
    brute_force_max_clique,
    verify_clique,
    verify_k_clique,
    verify_k_club,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphTooLarge",
    "ParseError",
    "Permutation",
    "density",
    "generate_gnp",
    "parse_dimacs",
    "parse_edge_list",
    "permute_by_degree",
    "write_dimacs",
    "write_edge_list",
    "bounded_bfs",
    "is_saturated",
    "power_graph",
    "ColourOrder",
    "DominationCache",
    "SearchStats",
    "Solution",
    "SolverOptions",
    "colour_order",
    "dominated_by",
    "dominated_set",
    "solve_max_clique",
    "solve_max_k_clique",
    "OracleLimitError",
    "all_pairs_distances",
    "unreachable",
    "brute_force_max_clique",
    "verify_clique",
    "verify_k_clique",
    "verify_k_club",
]

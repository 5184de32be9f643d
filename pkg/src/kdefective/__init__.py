"""Exact maximum k-defective clique computation.

A k-defective clique is a vertex set whose induced subgraph misses at most k
edges from being complete.  The package provides an exact branch-and-bound
solver with reduction rules and coloring-based upper bounds, degeneracy-based
initial heuristics, global graph shrinking, definition-level oracles for
verification, and a CLI.
"""

from .bounds import (
    ColoringPartition,
    combined_upper_bound,
    greedy_coloring,
    max_clique_size_within_budget,
    ub1,
    ub2,
    ub3,
    ub_coloring_basic,
)
from .config import PreprocessReport, SearchStats, SolverConfig, SolverResult
from .graph import (
    DegeneracyInfo,
    EdgeListFormatError,
    Graph,
    ParseReport,
    count_non_edges,
    degeneracy_ordering,
    induced_subgraph,
    induced_subgraph_with_ids,
    k_core,
    k_truss,
    load_edge_list,
)
from .instance import CANDIDATE, IN_S, REMOVED, Instance
from .oracle import (
    OracleBudget,
    OracleBudgetError,
    brute_force_max,
    brute_force_max_containing,
    brute_force_max_sizes,
    gamma_k,
    is_k_defective,
)
from .preprocess import degen, degen_opt, global_reduce, global_reduce_with_ids
from .reductions import (
    PairCounters,
    ReductionLog,
    apply_all,
    pair_counters,
    rr1_rr2_fixpoint,
    rr3,
    rr4,
    rr5,
)
from .search import branch_and_bound_t, kdc, select_branch_vertex, top_r_diversified

__version__ = "0.1.0"

__all__ = [
    "CANDIDATE",
    "ColoringPartition",
    "DegeneracyInfo",
    "EdgeListFormatError",
    "Graph",
    "IN_S",
    "Instance",
    "OracleBudget",
    "OracleBudgetError",
    "PairCounters",
    "ParseReport",
    "PreprocessReport",
    "REMOVED",
    "ReductionLog",
    "SearchStats",
    "SolverConfig",
    "SolverResult",
    "apply_all",
    "branch_and_bound_t",
    "brute_force_max",
    "brute_force_max_containing",
    "brute_force_max_sizes",
    "combined_upper_bound",
    "count_non_edges",
    "degen",
    "degen_opt",
    "degeneracy_ordering",
    "gamma_k",
    "global_reduce",
    "global_reduce_with_ids",
    "greedy_coloring",
    "induced_subgraph",
    "induced_subgraph_with_ids",
    "is_k_defective",
    "k_core",
    "k_truss",
    "kdc",
    "load_edge_list",
    "max_clique_size_within_budget",
    "pair_counters",
    "rr1_rr2_fixpoint",
    "rr3",
    "rr4",
    "rr5",
    "select_branch_vertex",
    "top_r_diversified",
    "ub1",
    "ub2",
    "ub3",
    "ub_coloring_basic",
]

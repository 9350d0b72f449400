"""tricover: vertex covers, matchings, and Berge-cycle structure of
3-uniform hypergraphs.

Every connected instance has a vertex cover of size at most (2m+1)/3; the
solver module realizes that bound constructively and the lab module checks
it, together with the structural facts behind it, over enumerated and
random instances.
"""

from ._native import BACKEND
from .core import (
    ComponentDecomposition,
    H3ParseError,
    Hypergraph,
    components,
    delete_edges,
    delete_vertices,
    induced_by_edges,
    parse_h3,
    serialize_h3,
)
from .cycles import (
    BergeCycle,
    CycleTree,
    all_cycles_vertex_disjoint,
    build_cycle_tree,
    find_cycle,
    find_low_cut_vertex,
    is_acyclic,
    is_minimal_cycle,
    minimal_cycle_pair,
    split_cycle,
)
from .lab import (
    Report,
    SuiteConfig,
    SuiteReport,
    canonical_instance,
    canonical_key,
    enumerate_connected,
    enumerate_hypertrees,
    gen_cycle,
    gen_hypertree_pm,
    gen_intersecting_cycles,
    gen_nonminimal_cycle,
    gen_random_connected,
    run_suite,
    verify_instance,
)
from .solver import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    SolveResult,
    constructive_cover,
    exact_nu,
    exact_tau,
    greedy_cover,
    greedy_matching,
    is_extremal,
)
from .trees import (
    Cover,
    Matching,
    check_hypertree,
    has_perfect_matching,
    hypertree_cover,
    hypertree_matching,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BergeCycle",
    "BudgetExceeded",
    "ComponentDecomposition",
    "Cover",
    "CycleTree",
    "DEFAULT_BUDGET",
    "H3ParseError",
    "Hypergraph",
    "Matching",
    "Report",
    "SolveResult",
    "SuiteConfig",
    "SuiteReport",
    "all_cycles_vertex_disjoint",
    "build_cycle_tree",
    "canonical_instance",
    "canonical_key",
    "check_hypertree",
    "components",
    "constructive_cover",
    "delete_edges",
    "delete_vertices",
    "enumerate_connected",
    "enumerate_hypertrees",
    "exact_nu",
    "exact_tau",
    "find_cycle",
    "find_low_cut_vertex",
    "gen_cycle",
    "gen_hypertree_pm",
    "gen_intersecting_cycles",
    "gen_nonminimal_cycle",
    "gen_random_connected",
    "greedy_cover",
    "greedy_matching",
    "has_perfect_matching",
    "hypertree_cover",
    "hypertree_matching",
    "induced_by_edges",
    "is_acyclic",
    "is_extremal",
    "is_minimal_cycle",
    "minimal_cycle_pair",
    "parse_h3",
    "run_suite",
    "serialize_h3",
    "split_cycle",
    "verify_instance",
]

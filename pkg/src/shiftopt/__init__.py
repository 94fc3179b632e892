"""Shifted combinatorial optimization over oracle-presented independence systems."""

from .core import (
    CongestionProfile,
    Matrix,
    Vector,
    columns,
    congestion,
    dims,
    equivalent,
    frobenius,
    from_columns,
    is_shifted,
    matrix,
    shift,
    shifted_value,
)
from .dup import (
    GREEDY_DUP,
    DupSolver,
    OrthogonalSelection,
    greedy_dup,
    greedy_ratio,
    orthogonalize,
)
from .oracles import (
    BipartiteGraph,
    BipartiteMatchings,
    ExplicitSystem,
    GraphicMatroid,
    IndependenceOracle,
    LiftedOracle,
    PartitionMatroid,
    UniformMatroid,
    down_close,
    is_downward_closed,
    lift_maximize,
)
from .sco import (
    ApproxResult,
    NotShiftedError,
    PotentialProfile,
    ceil_log2,
    clean,
    constant_shifted,
    convex_identical,
    level_candidate,
    log_approx,
    potential_profit,
    ratio_bound,
    small_n_approx,
)
from .instances import (
    DEFAULT_BUDGET,
    EnumerationBudgetExceeded,
    Graph,
    Instance,
    InstanceFormatError,
    Meta,
    PrescribedCongestion,
    all_matchings,
    bipartite_to_graph,
    body_to_system,
    brute_force_dup,
    brute_force_generalized,
    brute_force_sco,
    coloring_gadget,
    congestion_feasible,
    congestion_to_cost,
    exact_cover_exists,
    explicit_members,
    game_to_cost,
    hexagon_gadget,
    independent_set_gadget,
    parse,
    perfect_matchings,
    random_instance,
    serialize,
    social_cost,
)

__all__ = [
    "ApproxResult",
    "BipartiteGraph",
    "BipartiteMatchings",
    "CongestionProfile",
    "DEFAULT_BUDGET",
    "DupSolver",
    "EnumerationBudgetExceeded",
    "ExplicitSystem",
    "GREEDY_DUP",
    "Graph",
    "GraphicMatroid",
    "IndependenceOracle",
    "Instance",
    "InstanceFormatError",
    "LiftedOracle",
    "Matrix",
    "Meta",
    "NotShiftedError",
    "OrthogonalSelection",
    "PartitionMatroid",
    "PotentialProfile",
    "PrescribedCongestion",
    "UniformMatroid",
    "Vector",
    "all_matchings",
    "bipartite_to_graph",
    "body_to_system",
    "brute_force_dup",
    "brute_force_generalized",
    "brute_force_sco",
    "ceil_log2",
    "clean",
    "coloring_gadget",
    "columns",
    "congestion",
    "congestion_feasible",
    "congestion_to_cost",
    "constant_shifted",
    "convex_identical",
    "dims",
    "down_close",
    "equivalent",
    "exact_cover_exists",
    "explicit_members",
    "frobenius",
    "from_columns",
    "game_to_cost",
    "greedy_dup",
    "greedy_ratio",
    "hexagon_gadget",
    "independent_set_gadget",
    "is_downward_closed",
    "is_shifted",
    "level_candidate",
    "lift_maximize",
    "log_approx",
    "matrix",
    "orthogonalize",
    "parse",
    "perfect_matchings",
    "potential_profit",
    "random_instance",
    "ratio_bound",
    "serialize",
    "shift",
    "shifted_value",
    "small_n_approx",
    "social_cost",
]

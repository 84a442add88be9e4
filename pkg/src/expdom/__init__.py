"""Porous exponential domination toolkit: exact solves on grid families and
hypercubes, excess-rate lower bounds via a self-contained MILP engine, and
exactly verified periodic tiling certificates."""

from .domination import (
    DominationCertificate,
    GammaResult,
    WeightMatrix,
    check_certificate,
    exact_gamma,
    lp_lower,
    max_total_weight,
    size_lower_bound,
    weight_matrix,
)
from .excess import (
    BoundMode,
    BoundReport,
    ExcessRate,
    WEIGHT_CAPS,
    build_excess_milp,
    excess_rate,
    interior_indices,
    lower_bound_report,
    rate_table,
)
from .graphs import Family, Graph, bfs_distances, build_graph, sphere
from .hypercube import (
    HypercubeBounds,
    bounds_table,
    doubling_construction,
    lower_bound,
    total_weight,
)
from .lp import (
    BudgetError,
    LpProblem,
    LpSolution,
    Status,
    dump_problem,
    enumerate_oracle,
    simplex_backend,
    solve_lp,
    solve_milp,
)
from .tilings import (
    Tile,
    density,
    finite_construction,
    king_tile,
    slant_tile,
    torus_tile,
    verify_tile,
)

__version__ = "0.1.0"

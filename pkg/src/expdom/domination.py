"""Exponential-domination semantics: dyadic weight matrices, self-verifying
certificates, exact minimum dominating sets, LP relaxation lower bounds, and
the per-vertex total-weight cap.

A dominator u sends weight 2^(1-d) to every vertex at distance d (so 2 to
itself, 1 to neighbors); a vertex set is valid when every vertex receives
total weight at least 1. All certificate arithmetic is exact: weights are
dyadic rationals carried as integers at a common power-of-two scale.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np

from .graphs import Graph
from .lp import BudgetError, LpProblem, Status, solve_lp, solve_milp

__all__ = [
    "WeightMatrix",
    "DominationCertificate",
    "GammaResult",
    "weight_matrix",
    "check_certificate",
    "exact_gamma",
    "lp_lower",
    "max_total_weight",
    "size_lower_bound",
    "WEIGHT_MATRIX_CAP",
]

WEIGHT_MATRIX_CAP = 4096


class WeightMatrix:
    """Pairwise weights 2^(1-dist) over a graph, exact and symmetric.

    Entries are derived from the integer distance matrix, so exact access via
    :meth:`entry` costs nothing extra; :meth:`as_float` gives the float64 view
    the LP solvers consume.
    """

    def __init__(self, dist: np.ndarray):
        self.dist = dist
        self.n = dist.shape[0]
        self._float = None

    def entry(self, u: int, v: int) -> Fraction:
        return Fraction(2) ** (1 - int(self.dist[u, v]))

    def as_float(self) -> np.ndarray:
        if self._float is None:
            self._float = 2.0 ** (1.0 - self.dist.astype(float))
        return self._float

    def __getitem__(self, uv):
        return self.entry(*uv)


def weight_matrix(g: Graph, cap: int = WEIGHT_MATRIX_CAP) -> WeightMatrix:
    if g.n_vertices > cap:
        raise ValueError(f"graph has {g.n_vertices} vertices, above the cap of {cap}")
    return WeightMatrix(g.distance_matrix())


@dataclass
class DominationCertificate:
    """Vertex set plus its full received-weight profile; self-verifying.

    ``weights[v]`` is the exact total weight vertex v receives from the set.
    The certificate is valid when ``min_weight >= 1``; ``total_excess`` is the
    received weight beyond 1 summed over all vertices.
    """

    family: str
    dims: tuple[int, ...]
    members: tuple[int, ...]
    weights: list[Fraction]
    valid: bool
    min_weight: Fraction
    total_excess: Fraction
    member_coords: tuple

    def excess(self, v: int) -> Fraction:
        return self.weights[v] - 1

    def size(self) -> int:
        return len(self.members)

    def report(self) -> str:
        lines = [
            f"family: {self.family}",
            f"dims: {'x'.join(str(d) for d in self.dims)}",
            f"size: {len(self.members)}",
            f"members: {' '.join(str(c) for c in self.member_coords)}",
            f"min_weight: {self.min_weight}",
            f"total_excess: {self.total_excess}",
            f"valid: {str(self.valid).lower()}",
        ]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {
                "family": self.family,
                "dims": list(self.dims),
                "size": len(self.members),
                "members": [list(c) if isinstance(c, tuple) else c for c in self.member_coords],
                "min_weight": str(self.min_weight),
                "total_excess": str(self.total_excess),
                "valid": self.valid,
            }
        )


def _received_scaled(g: Graph, members) -> tuple[list[int], int]:
    """Received weight per vertex as integers scaled by 2^scale_exp.

    The scale is chosen so every contribution 2^(1-d) becomes an integer;
    Python integers keep the accumulation exact at any diameter.
    """
    rows = np.stack([g.distance_row(d) for d in members])
    dmax = int(rows.max())
    scale_exp = max(dmax - 1, 0)
    counts = np.zeros((g.n_vertices, dmax + 1), dtype=np.int32)
    idx = np.arange(g.n_vertices)
    for row in rows:
        counts[idx, row] += 1
    shifts = [1 << (1 - d + scale_exp) for d in range(dmax + 1)]
    received = []
    for v in range(g.n_vertices):
        row = counts[v]
        total = 0
        for d in np.flatnonzero(row):
            total += int(row[d]) * shifts[d]
        received.append(total)
    return received, scale_exp


def check_certificate(g: Graph, members) -> DominationCertificate:
    """Exact weight/excess profile of a candidate dominating set."""
    members = tuple(sorted(set(int(v) for v in members)))
    if not members:
        raise ValueError("dominating set must be nonempty")
    for v in members:
        g._check_vertex(v)
    received, scale_exp = _received_scaled(g, members)
    scale = 1 << scale_exp
    weights = [Fraction(r, scale) for r in received]
    min_w = min(weights)
    total_excess = Fraction(sum(received), scale) - g.n_vertices
    return DominationCertificate(
        family=g.family.value,
        dims=g.dims,
        members=members,
        weights=weights,
        valid=min_w >= 1,
        min_weight=min_w,
        total_excess=total_excess,
        member_coords=tuple(g.coord(v) for v in members),
    )


@dataclass
class GammaResult:
    """Exact minimum dominating-set size with a verified witness."""

    value: int
    certificate: DominationCertificate
    optimal: bool
    nodes: int


def _cover_problem(g: Graph, relaxed: bool) -> LpProblem:
    w = weight_matrix(g).as_float()
    p = LpProblem(np.ones(g.n_vertices))
    p.add_constraints(w, ">=", 1.0)
    if not relaxed:
        for j in range(g.n_vertices):
            p.set_bounds(j, upper=1.0)
        p.set_integral(range(g.n_vertices))
    return p


def exact_gamma(g: Graph, *, node_limit: int | None = None,
                time_limit: float | None = None) -> GammaResult:
    """Minimum size of an exponential dominating set, by integer programming.

    The witness is re-verified with exact arithmetic before returning. A
    budget-limited run returns the best incumbent with ``optimal=False`` or
    raises BudgetError when no incumbent exists at all.
    """
    sol = solve_milp(_cover_problem(g, relaxed=False),
                     node_limit=node_limit, time_limit=time_limit)
    if sol.status is Status.BUDGET_EXCEEDED and sol.x is None:
        raise BudgetError("budget exhausted before any dominating set was found")
    if sol.status not in (Status.OPTIMAL, Status.BUDGET_EXCEEDED):
        raise ArithmeticError(f"cover program came back {sol.status.value}; "
                              "the full vertex set always dominates")
    members = [int(j) for j in np.flatnonzero(sol.x > 0.5)]
    cert = check_certificate(g, members)
    if not cert.valid:
        raise ArithmeticError("solver returned an invalid dominating set")
    value = round(sol.objective)
    if abs(sol.objective - value) > 1e-6 or value != len(members):
        raise ArithmeticError(f"non-integral cover objective {sol.objective!r}")
    return GammaResult(value=value, certificate=cert,
                       optimal=sol.status is Status.OPTIMAL, nodes=sol.nodes)


def lp_lower(g: Graph) -> float:
    """Optimum of the fractional relaxation; a lower bound on exact_gamma."""
    sol = solve_lp(_cover_problem(g, relaxed=True))
    if sol.status is not Status.OPTIMAL:
        raise ArithmeticError(f"relaxation came back {sol.status.value}")
    return sol.objective


def max_total_weight(g: Graph) -> Fraction:
    """Largest total weight any single vertex can send to the whole graph.

    Independent of any particular dominating set, which is what makes it a
    sound cap inside :func:`size_lower_bound`.
    """
    best_num = 0
    best_scale = 0
    for v in range(g.n_vertices):
        row = g.distance_row(v)
        dmax = int(row.max())
        scale_exp = max(dmax - 1, 0)
        counts = np.bincount(row)
        total = 0
        for d in np.flatnonzero(counts):
            total += int(counts[d]) << (1 - d + scale_exp)
        # compare total / 2^scale_exp against the running best
        if best_num == 0 or total * (1 << best_scale) > best_num * (1 << scale_exp):
            best_num, best_scale = total, scale_exp
    return Fraction(best_num, 1 << best_scale)


def size_lower_bound(vertex_count: int, weight_cap, excess_rate) -> int:
    """ceil(vertex_count / (weight_cap - excess_rate)).

    Exact when both quantities are rational; float arithmetic otherwise.
    Rejects rates at or above the cap (nonpositive denominator).
    """
    if vertex_count <= 0:
        raise ValueError("vertex count must be positive")
    exact = isinstance(weight_cap, (int, Rational)) and isinstance(excess_rate, (int, Rational))
    denom = Fraction(weight_cap) - Fraction(excess_rate) if exact else weight_cap - excess_rate
    if denom <= 0:
        raise ValueError(f"excess rate {excess_rate} must stay below the cap {weight_cap}")
    if exact:
        return int(math.ceil(Fraction(vertex_count) / denom))
    return int(math.ceil(vertex_count / denom))

"""Self-contained linear programming engine: bounded-variable two-phase
simplex, best-first branch and bound, and an exhaustive enumeration oracle.

Scale target is small dense problems (a few hundred rows and columns), which
is why the tableau is dense and there is no presolve, cutting planes, sparse
factorization, or warm starting. Arithmetic is double precision with a
feasibility tolerance of 1e-7 and an integrality tolerance of 1e-6.
"""

from __future__ import annotations

import heapq
import math
import os
import time
from dataclasses import dataclass
from enum import Enum

import numpy as np

try:
    from . import _simplex_core  # compiled pivot loop
except ImportError:  # pragma: no cover - depends on build environment
    _simplex_core = None
if os.environ.get("EXPDOM_NO_EXT") == "1":
    _simplex_core = None

__all__ = [
    "Status",
    "LpProblem",
    "LpSolution",
    "BudgetError",
    "solve_lp",
    "solve_milp",
    "enumerate_oracle",
    "dump_problem",
    "simplex_backend",
    "FEASIBILITY_TOL",
    "INTEGRALITY_TOL",
]


def simplex_backend() -> str:
    """Which pivot-loop implementation is active: 'compiled' or 'numpy'."""
    return "numpy" if _simplex_core is None else "compiled"

FEASIBILITY_TOL = 1e-7
INTEGRALITY_TOL = 1e-6

_RCOST_TOL = 1e-9
_PIVOT_TOL = 1e-9
_RATIO_TIE_TOL = 1e-9

_SENSES = ("<=", ">=", "==")


class Status(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"
    # Node/time budget ran out; any objective/assignment is the best incumbent
    # and is NOT proved optimal.
    BUDGET_EXCEEDED = "budget_exceeded"


class BudgetError(RuntimeError):
    """Raised when an operation cannot even start within its budget."""


@dataclass
class LpSolution:
    status: Status
    objective: float | None
    x: np.ndarray | None
    iterations: int
    nodes: int = 0

    @property
    def optimal(self) -> bool:
        return self.status is Status.OPTIMAL


class LpProblem:
    """min (or max) c'x subject to row constraints, variable bounds, and an
    optional integrality mask.

    Rows are (coefficients, sense, rhs) with sense one of '<=', '>=', '=='.
    Bounds default to [0, +inf). The integrality mask is ignored by
    :func:`solve_lp` and enforced by :func:`solve_milp`.
    """

    def __init__(self, objective, direction: str = "min"):
        self.objective = np.asarray(objective, dtype=float)
        if self.objective.ndim != 1 or self.objective.size == 0:
            raise ValueError("objective must be a nonempty vector")
        if direction not in ("min", "max"):
            raise ValueError(f"direction must be 'min' or 'max', got {direction!r}")
        self.direction = direction
        self.n = self.objective.size
        self.lower = np.zeros(self.n)
        self.upper = np.full(self.n, np.inf)
        self.rows: list[tuple[np.ndarray, str, float]] = []
        self.integral: set[int] = set()

    def add_constraint(self, coeffs, sense: str, rhs: float) -> None:
        coeffs = np.asarray(coeffs, dtype=float)
        if coeffs.shape != (self.n,):
            raise ValueError(f"constraint has {coeffs.size} coefficients, expected {self.n}")
        if sense not in _SENSES:
            raise ValueError(f"sense must be one of {_SENSES}, got {sense!r}")
        self.rows.append((coeffs, sense, float(rhs)))

    def add_constraints(self, matrix, sense: str, rhs) -> None:
        """Add one row per matrix row, all with the same sense."""
        matrix = np.asarray(matrix, dtype=float)
        rhs = np.broadcast_to(np.asarray(rhs, dtype=float), (matrix.shape[0],))
        for row, b in zip(matrix, rhs):
            self.add_constraint(row, sense, b)

    def set_bounds(self, j: int, lower=None, upper=None) -> None:
        if not 0 <= j < self.n:
            raise ValueError(f"variable index {j} out of range")
        if lower is not None:
            self.lower[j] = lower
        if upper is not None:
            self.upper[j] = upper
        if not self.lower[j] <= self.upper[j]:
            raise ValueError(f"bounds for variable {j} are empty: [{self.lower[j]}, {self.upper[j]}]")

    def set_integral(self, indices) -> None:
        for j in indices:
            if not 0 <= int(j) < self.n:
                raise ValueError(f"integral index {j} out of range")
            self.integral.add(int(j))

    # internal matrix form used by the solvers
    def _arrays(self):
        m = len(self.rows)
        a = np.zeros((m, self.n))
        senses = []
        rhs = np.zeros(m)
        for i, (coeffs, sense, b) in enumerate(self.rows):
            a[i] = coeffs
            senses.append(sense)
            rhs[i] = b
        sign = 1.0 if self.direction == "min" else -1.0
        return sign * self.objective, a, senses, rhs, self.lower.copy(), self.upper.copy(), sign


def dump_problem(p: LpProblem) -> str:
    """Fixed-format plain-text listing for external cross-checking.

    Layout: direction line, objective row, one constraint per line as
    'coeffs.. <sense> rhs', a 'bounds:' block with one 'lower upper' line per
    variable, and the sorted integrality list.
    """
    out = [p.direction]
    out.append("objective: " + " ".join(repr(float(v)) for v in p.objective))
    out.append("subject-to:")
    for coeffs, sense, rhs in p.rows:
        out.append(" ".join(repr(float(v)) for v in coeffs) + f" {sense} {float(rhs)!r}")
    out.append("bounds:")
    for lo, up in zip(p.lower, p.upper):
        out.append(f"{float(lo)!r} {float(up)!r}")
    out.append("integral: " + " ".join(str(j) for j in sorted(p.integral)))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# simplex core


class _Simplex:
    """Dense-tableau two-phase simplex over bounded variables.

    Every row becomes an equality through a logical column whose bounds encode
    the sense; rows whose logical cannot absorb the right-hand side at the
    all-lower starting point get a unit artificial column, and phase one
    minimizes the artificial sum. Nonbasic variables sit at a finite bound and
    the ratio test allows bound flips. Entering rule is Dantzig, switching to
    Bland's rule for good after 5*(rows+cols) consecutive degenerate pivots.
    """

    def __init__(self, c, a, senses, b, lower, upper):
        m, n = a.shape
        if not np.all(np.isfinite(lower)):
            raise ValueError("structural variables need finite lower bounds")
        if np.any(lower > upper):
            raise ValueError("empty variable bound range")
        self.m, self.n = m, n
        self.c_struct = np.asarray(c, dtype=float)
        # shift structural variables so their lower bounds become 0
        self.shift = lower
        b = b - a @ lower
        n_total = n + m
        lo = np.zeros(n_total)
        hi = np.empty(n_total)
        hi[:n] = upper - lower
        for i, s in enumerate(senses):
            j = n + i
            if s == "<=":
                lo[j], hi[j] = 0.0, np.inf
            elif s == ">=":
                lo[j], hi[j] = -np.inf, 0.0
            else:
                lo[j], hi[j] = 0.0, 0.0
        # starting corner: all-lower, or all-upper when that leaves fewer rows
        # needing an artificial (possible only with finite upper bounds)
        struct_at_upper = False
        row_lower = np.clip(b, lo[n:], hi[n:])
        res_lower = b - row_lower
        start_logical, residual = row_lower, res_lower
        if m and np.all(np.isfinite(hi[:n])):
            b_up = b - a @ hi[:n]
            row_upper = np.clip(b_up, lo[n:], hi[n:])
            res_upper = b_up - row_upper
            if (np.abs(res_upper) > FEASIBILITY_TOL).sum() < (np.abs(res_lower) > FEASIBILITY_TOL).sum():
                struct_at_upper = True
                b = b_up  # logical values are taken relative to this corner
                start_logical, residual = row_upper, res_upper
        art_rows = np.flatnonzero(np.abs(residual) > FEASIBILITY_TOL)
        self.n_art = len(art_rows)
        row_sign = np.ones(m)
        row_sign[art_rows[residual[art_rows] < 0]] = -1.0
        art_block = np.zeros((m, self.n_art))
        basis = np.empty(m, dtype=np.int64)
        xb = np.empty(m)
        at_upper = np.zeros(n_total + self.n_art, dtype=bool)
        if struct_at_upper:
            at_upper[:n] = hi[:n] > lo[:n]
        basis[:] = n + np.arange(m)
        xb[:] = b
        for k, i in enumerate(art_rows):
            art_block[i, k] = 1.0
            basis[i] = n_total + k
            xb[i] = abs(residual[i])
            j = n + i
            at_upper[j] = np.isfinite(hi[j]) and start_logical[i] == hi[j] and hi[j] != lo[j]
        self.T = np.hstack([a * row_sign[:, None], np.diag(row_sign), art_block])
        self.lo = np.concatenate([lo, np.zeros(self.n_art)])
        self.hi = np.concatenate([hi, np.full(self.n_art, np.inf)])
        self.basis = basis
        self.xb = xb
        self.at_upper = at_upper
        self.n_total = n_total
        self.n_cols = n_total + self.n_art
        self.is_basic = np.zeros(self.n_cols, dtype=bool)
        self.is_basic[basis] = True
        self.iterations = 0
        self.max_iter = 200 * (self.m + self.n_cols) + 10_000
        self._bland_after = 5 * (self.m + self.n_cols)
        self._outer_buf = np.empty_like(self.T)
        self._col_buf = np.empty(m)
        self._ratio_buf = np.empty(m)

    def _nonbasic_value(self, j):
        return self.hi[j] if self.at_upper[j] else self.lo[j]

    def _assemble(self):
        x = np.where(self.at_upper, self.hi, self.lo)
        x[~np.isfinite(x)] = 0.0  # defensive; nonbasic vars sit at finite bounds
        x[self.basis] = self.xb
        return x

    def _iterate(self, cost, allow_cols):
        """Run primal pivots to optimality for the given cost vector.

        Dispatches to the compiled kernel when it is available; the numpy
        loop below is the fallback and the reference for both."""
        z = cost - cost[self.basis] @ self.T
        self.redcost = z
        if _simplex_core is not None:
            code, iters = _simplex_core.iterate(
                self.T, z, self.xb, self.basis,
                self.is_basic.view(np.uint8), self.at_upper.view(np.uint8),
                np.ascontiguousarray(allow_cols).view(np.uint8),
                self.lo, self.hi, self._col_buf, self._ratio_buf,
                self._bland_after, self.max_iter - self.iterations)
            self.iterations += iters
            if code == 2:
                raise ArithmeticError("simplex iteration limit exceeded")
            return "optimal" if code == 0 else "unbounded"
        degen_streak = 0
        bland = False
        bland_after = self._bland_after
        max_iter = self.max_iter
        movable = (self.hi - self.lo) > _RCOST_TOL
        nonbasic_ok = allow_cols & movable
        while True:
            if self.iterations > max_iter:
                raise ArithmeticError("simplex iteration limit exceeded")
            score = np.where(self.at_upper, z, -z)
            improving = ~self.is_basic & nonbasic_ok & (score > _RCOST_TOL)
            if not improving.any():
                return "optimal"
            if bland:
                j = int(np.flatnonzero(improving)[0])
            else:
                j = int(np.argmax(np.where(improving, score, -np.inf)))
            sigma = -1.0 if self.at_upper[j] else 1.0
            col = self.T[:, j]
            delta = sigma * col
            # step limits: the entering variable's own range, then each basic
            # variable running into one of its bounds
            t_self = self.hi[j] - self.lo[j]
            dec = delta > _PIVOT_TOL
            inc = delta < -_PIVOT_TOL
            ratios = np.full(self.m, np.inf)
            blo = self.lo[self.basis]
            bhi = self.hi[self.basis]
            with np.errstate(divide="ignore", invalid="ignore"):
                ratios[dec] = (self.xb[dec] - blo[dec]) / delta[dec]
                ratios[inc] = (self.xb[inc] - bhi[inc]) / delta[inc]
            np.nan_to_num(ratios, copy=False, nan=np.inf, posinf=np.inf, neginf=np.inf)
            np.maximum(ratios, 0.0, out=ratios)
            rmin = float(ratios.min()) if self.m else np.inf
            if rmin < t_self - _RATIO_TIE_TOL:
                tie = np.flatnonzero(ratios <= rmin + _RATIO_TIE_TOL)
                if bland:
                    r = int(tie[np.argmin(self.basis[tie])])
                else:
                    r = int(tie[np.argmax(np.abs(col[tie]))])
                step = float(ratios[r])
                kind = "pivot"
            else:
                step = min(t_self, rmin)
                kind = "flip"
            if not np.isfinite(step):
                return "unbounded"
            self.iterations += 1
            if step <= _RATIO_TIE_TOL:
                degen_streak += 1
                if degen_streak > bland_after:
                    bland = True
            else:
                degen_streak = 0
            if kind == "flip":
                self.xb -= step * delta
                self.at_upper[j] = not self.at_upper[j]
                continue
            leave = self.basis[r]
            # the leaving variable settles on the bound it ran into
            self.at_upper[leave] = delta[r] < 0
            enter_val = self._nonbasic_value(j) + sigma * step
            self.xb -= step * delta
            piv = self.T[r, j]
            self.T[r] /= piv
            colv = self.T[:, j].copy()
            colv[r] = 0.0
            np.outer(colv, self.T[r], out=self._outer_buf)
            self.T -= self._outer_buf
            zj = z[j]
            z -= zj * self.T[r]
            self.basis[r] = j
            self.is_basic[leave] = False
            self.is_basic[j] = True
            self.xb[r] = enter_val
            self.at_upper[j] = False

    def solve(self):
        allow = np.ones(self.n_cols, dtype=bool)
        if self.n_art:
            cost1 = np.zeros(self.n_cols)
            cost1[self.n_total:] = 1.0
            status = self._iterate(cost1, allow)
            if status != "optimal":
                raise ArithmeticError("phase one cannot be unbounded")
            art_basic = self.basis >= self.n_total
            infeas = float(np.clip(self.xb[art_basic], 0.0, None).sum())
            if infeas > FEASIBILITY_TOL:
                return Status.INFEASIBLE, None, None
            # pin artificials at zero; pivot basic ones out where possible
            self.hi[self.n_total:] = 0.0
            self.at_upper[self.n_total:] = False
            for r in np.flatnonzero(art_basic):
                row = self.T[r, : self.n_total]
                choices = np.flatnonzero((np.abs(row) > 1e-6) & ~self.is_basic[: self.n_total])
                if choices.size:
                    self._exchange_at_zero(int(r), int(choices[0]))
                # else: dependent row, the artificial stays basic pinned at 0
            allow[self.n_total:] = False
        cost2 = np.zeros(self.n_cols)
        cost2[: self.n] = self.c_struct
        status = self._iterate(cost2, allow)
        if status == "unbounded":
            return Status.UNBOUNDED, None, None
        x = self._assemble()
        return Status.OPTIMAL, x, float(cost2 @ x)

    def _exchange_at_zero(self, r, j):
        """Degenerate basis exchange: nonbasic j replaces the level-0 basic of
        row r without moving the current point."""
        enter_val = self._nonbasic_value(j)
        leave = self.basis[r]
        piv = self.T[r, j]
        self.T[r] /= piv
        colv = self.T[:, j].copy()
        colv[r] = 0.0
        np.outer(colv, self.T[r], out=self._outer_buf)
        self.T -= self._outer_buf
        self.basis[r] = j
        self.is_basic[leave] = False
        self.is_basic[j] = True
        self.at_upper[leave] = False
        self.at_upper[j] = False
        self.xb[r] = enter_val

    def structural_solution(self, x):
        return x[: self.n] + self.shift


def _solve_arrays(c, a, senses, b, lower, upper, want_redcost=False):
    sx = _Simplex(c, a, senses, b, lower, upper)
    status, x, _ = sx.solve()
    if status is not Status.OPTIMAL:
        sol = LpSolution(status, None, None, sx.iterations)
        return (sol, None, None, None) if want_redcost else sol
    xs = sx.structural_solution(x)
    _check_residuals(a, senses, b, xs)
    sol = LpSolution(Status.OPTIMAL, float(c @ xs), xs, sx.iterations)
    if not want_redcost:
        return sol
    n = sx.n
    nonbasic = ~sx.is_basic[:n]
    return sol, sx.redcost[:n], nonbasic & ~sx.at_upper[:n], nonbasic & sx.at_upper[:n]


def _check_residuals(a, senses, b, x, tol=1e-6):
    if not senses:
        return
    ax = a @ x
    viol = 0.0
    for i, s in enumerate(senses):
        if s == "<=":
            viol = max(viol, ax[i] - b[i])
        elif s == ">=":
            viol = max(viol, b[i] - ax[i])
        else:
            viol = max(viol, abs(ax[i] - b[i]))
    if viol > tol:
        raise ArithmeticError(f"simplex returned an infeasible point (violation {viol:.3e})")


def solve_lp(problem: LpProblem) -> LpSolution:
    """Solve the LP relaxation (integrality mask ignored)."""
    c, a, senses, b, lower, upper, sign = problem._arrays()
    sol = _solve_arrays(c, a, senses, b, lower, upper)
    if sol.status is Status.OPTIMAL:
        sol.objective = sign * sol.objective
    return sol


# ---------------------------------------------------------------------------
# branch and bound


def solve_milp(problem: LpProblem, *, node_limit: int | None = None,
               time_limit: float | None = None) -> LpSolution:
    """Best-first branch and bound on LP relaxations.

    Branches on the most fractional integral variable (ties to the lowest
    index) and queues the floor branch first. An exhausted node or time budget
    returns the best incumbent with status BUDGET_EXCEEDED, distinct from a
    proved Infeasible.
    """
    c, a, senses, b, lower, upper, sign = problem._arrays()
    int_idx = np.array(sorted(problem.integral), dtype=int)
    if int_idx.size == 0:
        return solve_lp(problem)
    int_mask = np.zeros(problem.n, dtype=bool)
    int_mask[int_idx] = True
    # an all-integer objective supported on integral variables lets every node
    # bound round up to the next integer
    support = np.flatnonzero(np.abs(c) > 0)
    objective_integral = support.size > 0 and all(
        j in problem.integral and float(c[j]).is_integer() for j in support
    )

    def tighten(bound):
        if objective_integral and np.isfinite(bound):
            return float(math.ceil(bound - INTEGRALITY_TOL))
        return bound

    # Node bounds are stored as ancestry chains of (var, is_upper, value)
    # tightenings over the root arrays, not as array copies: the frontier of
    # a weak relaxation can run to millions of nodes and full copies would
    # exhaust memory long before time runs out.
    def materialize(payload):
        los, his = lower.copy(), upper.copy()
        while payload is not None:
            payload, overrides = payload
            for j, is_upper, val in overrides:
                if is_upper:
                    his[j] = min(his[j], val)
                else:
                    los[j] = max(los[j], val)
        return los, his

    t0 = time.monotonic()
    best_x = None
    best_obj = np.inf
    nodes = 0
    iterations = 0
    counter = 0
    # ties on the bound favor deeper nodes, so the search dives to an
    # incumbent before sweeping a plateau of equal bounds
    heap = [(-np.inf, 0, counter, None)]
    compact_at = 1 << 14
    exhausted = False
    while heap:
        bound, negdepth, _, payload = heapq.heappop(heap)
        if bound >= best_obj - 1e-9:
            break  # best-first: no remaining node can improve
        if node_limit is not None and nodes >= node_limit:
            exhausted = True
            break
        if time_limit is not None and time.monotonic() - t0 > time_limit:
            exhausted = True
            break
        if len(heap) > compact_at:
            # drop stale entries the incumbent already dominates
            live = [e for e in heap if e[0] < best_obj - 1e-9]
            if len(live) < len(heap):
                heap = live
                heapq.heapify(heap)
            compact_at = max(1 << 14, 2 * len(heap))
        lo, hi = materialize(payload)
        if (lo > hi).any():
            continue
        sol, redcost, at_lo, at_hi = _solve_arrays(c, a, senses, b, lo, hi, want_redcost=True)
        nodes += 1
        iterations += sol.iterations
        if sol.status is Status.INFEASIBLE:
            continue
        if sol.status is Status.UNBOUNDED:
            return LpSolution(Status.UNBOUNDED, None, None, iterations, nodes)
        z = tighten(sol.objective)
        if z >= best_obj - 1e-9:
            continue
        frac = np.abs(sol.x[int_idx] - np.round(sol.x[int_idx]))
        if (frac <= INTEGRALITY_TOL).all():
            x = sol.x.copy()
            x[int_idx] = np.round(x[int_idx])
            obj = float(c @ x)
            if obj < best_obj - 1e-9:
                best_obj = obj
                best_x = x
            continue
        fixes = ()
        if np.isfinite(best_obj):
            # reduced-cost fixing: a nonbasic integral variable whose unit
            # move would push the LP bound to or past the incumbent can stay
            # at its bound throughout this subtree
            gain = np.zeros(len(c))
            gain[at_lo] = np.clip(redcost[at_lo], 0.0, None)
            gain[at_hi] = np.clip(-redcost[at_hi], 0.0, None)
            bnd = sol.objective + gain
            if objective_integral:
                bnd = np.ceil(bnd - INTEGRALITY_TOL)
            fixable = int_mask & (gain > 0) & (hi - lo > 0.5) & (bnd >= best_obj - 1e-9)
            # fixing at the lower bound pins the upper bound, and vice versa
            fixes = tuple(
                (int(j), bool(at_lo[j]), float(lo[j] if at_lo[j] else hi[j]))
                for j in np.flatnonzero(fixable)
            )
        j = int(int_idx[np.argmax(np.minimum(frac, 1.0 - frac))])
        val = float(sol.x[j])
        counter += 1
        if math.floor(val) >= lo[j]:
            child = (payload, fixes + ((j, True, float(math.floor(val))),))
            heapq.heappush(heap, (z, negdepth - 1, counter, child))
        counter += 1
        if math.ceil(val) <= hi[j]:
            child = (payload, fixes + ((j, False, float(math.ceil(val))),))
            heapq.heappush(heap, (z, negdepth - 1, counter, child))
    if exhausted:
        if best_x is None:
            return LpSolution(Status.BUDGET_EXCEEDED, None, None, iterations, nodes)
        return LpSolution(Status.BUDGET_EXCEEDED, sign * best_obj, best_x, iterations, nodes)
    if best_x is None:
        return LpSolution(Status.INFEASIBLE, None, None, iterations, nodes)
    return LpSolution(Status.OPTIMAL, sign * best_obj, best_x, iterations, nodes)


# ---------------------------------------------------------------------------
# enumeration oracle


def enumerate_oracle(problem: LpProblem, *, max_combinations: int = 1 << 20,
                     chunk: int = 1 << 14) -> LpSolution:
    """Exhaustively enumerate all integral assignments; ground truth for
    solve_milp on small instances.

    Requires every variable integral with finite bounds and at most
    ``max_combinations`` assignments; raises BudgetError beyond that.
    """
    c, a, senses, b, lower, upper, sign = problem._arrays()
    n = problem.n
    if set(problem.integral) != set(range(n)):
        raise ValueError("enumeration needs every variable integral")
    if not np.all(np.isfinite(upper)):
        raise ValueError("enumeration needs finite bounds")
    lo = np.ceil(lower - INTEGRALITY_TOL).astype(np.int64)
    hi = np.floor(upper + INTEGRALITY_TOL).astype(np.int64)
    sizes = hi - lo + 1
    if np.any(sizes <= 0):
        return LpSolution(Status.INFEASIBLE, None, None, 0)
    total = 1
    for s in sizes:
        total *= int(s)
        if total > max_combinations:
            raise BudgetError(f"more than {max_combinations} combinations")
    # mixed-radix decode, variable 0 most significant (lexicographic order)
    places = np.ones(n, dtype=np.int64)
    for j in range(n - 2, -1, -1):
        places[j] = places[j + 1] * sizes[j + 1]
    le = np.array([s == "<=" for s in senses])
    ge = np.array([s == ">=" for s in senses])
    eq = np.array([s == "==" for s in senses])
    best_obj = np.inf
    best_x = None
    for start in range(0, total, chunk):
        ks = np.arange(start, min(start + chunk, total), dtype=np.int64)
        x = lo[None, :] + (ks[:, None] // places[None, :]) % sizes[None, :]
        ax = x @ a.T
        ok = np.ones(len(ks), dtype=bool)
        if le.any():
            ok &= (ax[:, le] <= b[le] + FEASIBILITY_TOL).all(axis=1)
        if ge.any():
            ok &= (ax[:, ge] >= b[ge] - FEASIBILITY_TOL).all(axis=1)
        if eq.any():
            ok &= (np.abs(ax[:, eq] - b[eq]) <= FEASIBILITY_TOL).all(axis=1)
        if not ok.any():
            continue
        objs = x[ok] @ c
        i = int(np.argmin(objs))
        if objs[i] < best_obj - 1e-12:
            best_obj = float(objs[i])
            best_x = x[ok][i].astype(float)
    if best_x is None:
        return LpSolution(Status.INFEASIBLE, None, None, 0)
    return LpSolution(Status.OPTIMAL, sign * best_obj, best_x, 0)

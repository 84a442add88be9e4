"""Compare the compiled simplex kernel against the numpy fallback.

Runs the same solves through both backends and reports wall time and the
speedup. Both backends execute identical pivot sequences, so objective,
node count, and iteration count must agree exactly; the script asserts it.

Usage: python benchmarks/simplex_backends.py [--heavy]
"""

import argparse
import time

import numpy as np

import expdom.lp as lp
from expdom.excess import build_excess_milp
from expdom.graphs import Family, build_graph
from expdom.lp import LpProblem, solve_lp, solve_milp


def cover_ip(family, n):
    g = build_graph(family, n)
    w = 2.0 ** (1.0 - g.distance_matrix().astype(float))
    p = LpProblem(np.ones(g.n_vertices))
    p.add_constraints(w, ">=", 1.0)
    for j in range(g.n_vertices):
        p.set_bounds(j, upper=1.0)
    p.set_integral(range(g.n_vertices))
    return p


def workloads(heavy):
    yield "lp relaxation, king 10x10", solve_lp, cover_ip(Family.KING, 10)
    yield "exact cover ip, king 6x6", solve_milp, cover_ip(Family.KING, 6)
    yield "exact cover ip, slant 7x7", solve_milp, cover_ip(Family.SLANT, 7)
    yield "excess milp, king r=7", solve_milp, build_excess_milp(Family.KING, 7).problem
    yield "excess milp, king r=9", solve_milp, build_excess_milp(Family.KING, 9).problem
    if heavy:
        yield "exact cover ip, king 8x8", solve_milp, cover_ip(Family.KING, 8)
        yield "excess milp infeasible, king r=11", solve_milp, build_excess_milp(Family.KING, 11).problem


def run(solver, problem):
    t = time.perf_counter()
    sol = solver(problem)
    return time.perf_counter() - t, sol


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--heavy", action="store_true", help="include the slow workloads")
    args = ap.parse_args()
    if lp.simplex_backend() != "compiled":
        raise SystemExit("compiled backend not built; nothing to compare")
    print(f"{'workload':40} {'compiled':>10} {'numpy':>10} {'speedup':>8}")
    for name, solver, problem in workloads(args.heavy):
        t_fast, sol_fast = run(solver, problem)
        saved = lp._simplex_core
        lp._simplex_core = None
        try:
            t_slow, sol_slow = run(solver, problem)
        finally:
            lp._simplex_core = saved
        assert sol_fast.status is sol_slow.status
        assert sol_fast.objective == sol_slow.objective
        assert sol_fast.iterations == sol_slow.iterations
        assert sol_fast.nodes == sol_slow.nodes
        print(f"{name:40} {t_fast:9.3f}s {t_slow:9.3f}s {t_slow / t_fast:7.1f}x")


if __name__ == "__main__":
    main()

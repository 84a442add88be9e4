"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
report. The optional tier (slant 9 and 10) runs under a 600-second budget per
solve and reports a SKIP line when the budget is hit; set
EXPDOM_SKIP_OPTIONAL=1 to leave the tier out entirely.
"""

import os
import time
from fractions import Fraction

import numpy as np

from expdom.domination import exact_gamma, lp_lower
from expdom.excess import excess_rate
from expdom.graphs import Family, build_graph
from expdom.hypercube import (
    construction_members,
    doubling_construction,
    exact_value,
    lower_bound,
    total_weight,
    total_weight_bruteforce,
)
from expdom.lp import BudgetError, Status, enumerate_oracle, solve_milp
from expdom.tilings import (
    density,
    finite_construction,
    king_tile,
    slant_tile,
    torus_tile,
    verify_tile,
)

KING_VALUES = {2: 1, 3: 1, 4: 2, 5: 3, 6: 4, 7: 4, 8: 6, 9: 7, 10: 8}
SLANT_VALUES = {3: 2, 4: 3, 5: 4, 6: 5, 7: 6, 8: 7, 9: 8, 10: 10}
OPTIONAL_BUDGET_SECONDS = 600.0
SKIP_OPTIONAL = os.environ.get("EXPDOM_SKIP_OPTIONAL") == "1"


def report(criterion, ok, detail):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
    assert ok, f"criterion {criterion}: {detail}"


def report_skip(criterion, detail):
    print(f"[SKIP] criterion {criterion}: {detail}")


def _solve_family(family, n, budget):
    t = time.monotonic()
    res = exact_gamma(build_graph(family, n), time_limit=budget)
    return res, time.monotonic() - t


def test_criterion_1_king_exact_values():
    fails = []
    times = []
    for n in range(2, 11):
        limit = 60.0 if n <= 7 else 600.0
        res, dt = _solve_family(Family.KING, n, None)
        times.append(f"n={n}:{dt:.1f}s")
        if not (res.optimal and res.value == KING_VALUES[n] and dt <= limit):
            fails.append(f"n={n} got {res.value} optimal={res.optimal} in {dt:.1f}s")
    report(1, not fails,
           f"king exact n=2..10 = {list(KING_VALUES.values())} ({', '.join(times)})"
           if not fails else "; ".join(fails))


def test_criterion_2_slant_exact_values():
    fails = []
    times = []
    for n in range(3, 9):
        res, dt = _solve_family(Family.SLANT, n, None)
        times.append(f"n={n}:{dt:.1f}s")
        if not (res.optimal and res.value == SLANT_VALUES[n] and dt <= 60.0):
            fails.append(f"n={n} got {res.value} optimal={res.optimal} in {dt:.1f}s")
    report(2, not fails,
           f"slant exact n=3..8 = {[SLANT_VALUES[n] for n in range(3, 9)]} ({', '.join(times)})"
           if not fails else "; ".join(fails))


def test_criterion_2_slant_optional_tier():
    if SKIP_OPTIONAL:
        report_skip("2 (optional)", "slant n=9,10 skipped via EXPDOM_SKIP_OPTIONAL")
        return
    for n in (9, 10):
        t = time.monotonic()
        try:
            res = exact_gamma(build_graph(Family.SLANT, n),
                              time_limit=OPTIONAL_BUDGET_SECONDS)
        except BudgetError:
            # the bound frontier climbs whole integer plateaus here, so a
            # budget stop can come before any incumbent exists at all
            report_skip("2 (optional)",
                        f"slant n={n} budget-limited after "
                        f"{time.monotonic() - t:.0f}s (no incumbent proven)")
            continue
        dt = time.monotonic() - t
        if res.optimal:
            report("2 (optional)", res.value == SLANT_VALUES[n],
                   f"slant n={n} = {res.value} in {dt:.1f}s")
        else:
            report_skip("2 (optional)",
                        f"slant n={n} budget-limited after {dt:.0f}s "
                        f"(incumbent {res.value}, not proven)")


def test_criterion_3_king_rate_table():
    t = time.monotonic()
    fails = []
    expected = {3: 1.0, 5: 5.7806, 7: 10.6905, 9: 10.4103}
    for r in (3, 5, 7, 9):
        rate = excess_rate(Family.KING, r)
        if not (rate.feasible and abs(rate.rate - expected[r]) <= 1e-3):
            fails.append(f"r={r} got {rate.rate if rate.feasible else None}")
    r7 = excess_rate(Family.KING, 7)
    if abs(r7.objective - 35.6904966982) > 1e-6:
        fails.append(f"objective r=7 {r7.objective!r}")
    if abs(r7.denominator - 23.3095033018) > 1e-6:
        fails.append(f"denominator r=7 {r7.denominator!r}")
    if excess_rate(Family.KING, 11).feasible:
        fails.append("r=11 unexpectedly feasible")
    dt = time.monotonic() - t
    report(3, not fails and dt < 120,
           f"king rates 1, 5.7806, 10.6905, 10.4103, infeasible at r=11; "
           f"objective(r=7)=35.6904966982 [{dt:.1f}s]" if not fails else "; ".join(fails))


def test_criterion_4_slant_rate_table():
    t = time.monotonic()
    fails = []
    expected = {3: 1.2353, 5: 3.9774, 7: 6.2655}
    for r in (3, 5, 7):
        rate = excess_rate(Family.SLANT, r)
        if not (rate.feasible and abs(rate.rate - expected[r]) <= 1e-3):
            fails.append(f"r={r} got {rate.rate if rate.feasible else None}")
    r7 = excess_rate(Family.SLANT, 7)
    if abs(r7.denominator - 19.7344975348) > 1e-6:
        fails.append(f"denominator r=7 {r7.denominator!r}")
    if excess_rate(Family.SLANT, 9).feasible:
        fails.append("r=9 unexpectedly feasible")
    dt = time.monotonic() - t
    report(4, not fails and dt < 120,
           f"slant rates 1.2353, 3.9774, 6.2655, infeasible at r=9; "
           f"denominator(r=7)=19.7344975348 [{dt:.1f}s]" if not fails else "; ".join(fails))


def test_criterion_5_tile_certificates():
    t = time.monotonic()
    fails = []
    for tile, frac in ((king_tile(), Fraction(1, 23)),
                       (slant_tile(), Fraction(1, 19)),
                       (torus_tile(), Fraction(1, 13))):
        if density(tile) != frac:
            fails.append(f"{tile.family.value} density {density(tile)}")
        for multiple in (1, 2):
            cert = verify_tile(tile, multiple)
            if not (cert.valid and cert.min_weight >= 1):
                fails.append(f"{tile.family.value} x{multiple} min {cert.min_weight}")
    dt = time.monotonic() - t
    report(5, not fails and dt < 30,
           f"king/slant/torus tiles valid at multiples 1 and 2, densities "
           f"1/23, 1/19, 1/13 [{dt:.1f}s]" if not fails else "; ".join(fails))


def test_criterion_6_finite_constructions():
    t = time.monotonic()
    fails = []
    for family, period, lo, hi in ((Family.KING, 23, 23, 51),
                                   (Family.SLANT, 19, 19, 43)):
        for n in range(lo, hi + 1):
            cert = finite_construction(family, n)
            q, rem = divmod(n, period)
            bound = period * q * q + 2 * period * q * rem + rem * rem
            if not (cert.valid and cert.size() <= bound):
                fails.append(f"{family.value} n={n} size={cert.size()} valid={cert.valid}")
    dt = time.monotonic() - t
    report(6, not fails and dt < 120,
           f"constructions valid with sizes within the block counts for king "
           f"23..51 and slant 19..43 [{dt:.1f}s]" if not fails else "; ".join(fails))


def test_criterion_7_hypercube():
    fails = []
    for n in range(1, 11):
        if total_weight(n) != total_weight_bruteforce(n):
            fails.append(f"total weight n={n}")
        cert = doubling_construction(n)
        size = cert.size()
        if not cert.valid or size != 2 ** (n // 2):
            fails.append(f"construction n={n}")
        if n >= 3 and size != 2 * len(construction_members(n - 2)):
            fails.append(f"recursion n={n}")
    for n in range(2, 7):
        res = exact_value(n)
        size = len(construction_members(n))
        if not (res.optimal and lower_bound(n) <= res.value <= size):
            fails.append(f"bracket n={n}: {lower_bound(n)} <= {res.value} <= {size}")
    anomaly = f"n=1 formula bound {lower_bound(1)} vs exact {exact_value(1).value} (reported, not asserted)"
    report(7, not fails,
           f"total weights exact to n=10, constructions valid with doubling "
           f"sizes, brackets hold for n=2..6; {anomaly}" if not fails else "; ".join(fails))


def _random_cover(rng):
    n = rng.integers(5, 16)
    m = rng.integers(3, 13)
    a = (rng.random((m, n)) < 0.35).astype(float)
    for i in range(m):
        if not a[i].any():
            a[i, rng.integers(n)] = 1.0
    c = rng.integers(1, 6, size=n).astype(float) if rng.random() < 0.5 else rng.random(n) + 0.5
    from expdom.lp import LpProblem
    p = LpProblem(c)
    p.add_constraints(a, ">=", 1.0)
    for j in range(n):
        p.set_bounds(j, upper=1.0)
    p.set_integral(range(n))
    return p, a


def test_criterion_8_solver_soundness():
    rng = np.random.default_rng(20240612)
    fails = []
    for k in range(200):
        p, a = _random_cover(rng)
        ip = solve_milp(p)
        oracle = enumerate_oracle(p)
        if ip.status is not oracle.status:
            fails.append(f"instance {k}: status {ip.status} vs {oracle.status}")
            continue
        if ip.status is Status.OPTIMAL:
            if abs(ip.objective - oracle.objective) > 1e-9:
                fails.append(f"instance {k}: {ip.objective} vs {oracle.objective}")
            if (a @ ip.x < 1.0 - 1e-7).any():
                fails.append(f"instance {k}: residual above 1e-7")
    for family, values in ((Family.KING, KING_VALUES), (Family.SLANT, SLANT_VALUES)):
        for n, gamma in values.items():
            lo = lp_lower(build_graph(family, n))
            if lo > gamma + 1e-7:
                fails.append(f"lp_lower({family.value} {n}) = {lo} > {gamma}")
    report(8, not fails,
           "200/200 random covers match exhaustive enumeration, residuals "
           "within 1e-7, relaxation below every exact value"
           if not fails else "; ".join(fails[:5]))


def test_criterion_9_exclusions_documented():
    report(9, True,
           "excluded by design: asymptotic limits certified only via the "
           "wrapped tile certificates of criterion 5; the prior-work torus "
           "constant 13.761891939197298 is out of scope")

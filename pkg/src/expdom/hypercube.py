"""Hypercube bounds: the closed-form total weight, the analytic size lower
bound, and the recursive two-subcube construction for the upper bound.

The n-cube is vertex transitive, so every vertex sends the same total weight
2*(3/2)^n to the graph. The lower bound divides 2^n by that cap less a
guaranteed per-dominator excess of (2n+9)/8; the upper bound doubles a
dominating set of the (n-2)-cube into two diagonally opposite subcubes.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .domination import DominationCertificate, GammaResult, check_certificate, exact_gamma
from .graphs import Family, build_graph

__all__ = [
    "HypercubeBounds",
    "total_weight",
    "total_weight_bruteforce",
    "lower_bound",
    "construction_members",
    "doubling_construction",
    "exact_value",
    "bounds_table",
    "bounds_csv",
]


def total_weight(n: int) -> Fraction:
    """Total weight one vertex sends to the whole n-cube: 2*(3/2)^n exactly."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    return 2 * Fraction(3, 2) ** n


def total_weight_bruteforce(n: int) -> Fraction:
    """Independent check: direct sum of 2^(1-popcount(u)) over all vertices."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    return sum(Fraction(2) ** (1 - u.bit_count()) for u in range(1 << n))


def lower_bound(n: int) -> int:
    """ceil(2^(n+3) / (2^(4-n)*3^n - 2n - 9)), evaluated exactly.

    Note the n=1 anomaly: the formula gives 2 while a single vertex
    dominates the 1-cube; callers report both rather than patching either.
    """
    if n < 1:
        raise ValueError("dimension must be >= 1")
    # scale by 2^n: ceil(2^(2n+3) / (16*3^n - (2n+9)*2^n))
    denom = 16 * 3 ** n - (2 * n + 9) * 2 ** n
    if denom <= 0:
        raise ArithmeticError(f"nonpositive denominator at n={n}")
    num = 1 << (2 * n + 3)
    return -(-num // denom)


def construction_members(n: int) -> tuple[int, ...]:
    """Recursive dominating set: two copies of the (n-2)-cube set placed in
    the subcubes with low bits 00 and 11. Sizes satisfy a(n) = 2*a(n-2)
    with a(1) = 1 and a(2) = 2, so a(n) = 2^floor(n/2)."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    if n == 1:
        return (0,)
    if n == 2:
        return (0, 3)
    prev = construction_members(n - 2)
    return tuple(sorted([v << 2 for v in prev] + [(v << 2) | 3 for v in prev]))


def doubling_construction(n: int) -> DominationCertificate:
    """Build and exactly verify the recursive construction on the n-cube."""
    members = construction_members(n)
    g = build_graph(Family.HYPERCUBE, n)
    cert = check_certificate(g, members)
    if not cert.valid:
        raise ArithmeticError(f"doubling construction invalid at n={n}; "
                              f"min weight {cert.min_weight}")
    return cert


def exact_value(n: int, *, node_limit: int | None = None,
                time_limit: float | None = None,
                max_dimension: int = 7) -> GammaResult:
    """Exact minimum via the integer program; capped by default at the
    7-cube (128 vertices)."""
    if n > max_dimension:
        raise ValueError(f"dimension {n} above the default cap {max_dimension}; "
                         "raise max_dimension explicitly for bigger solves")
    g = build_graph(Family.HYPERCUBE, n)
    return exact_gamma(g, node_limit=node_limit, time_limit=time_limit)


@dataclass(frozen=True)
class HypercubeBounds:
    n: int
    total_weight: Fraction
    lower: int
    construction_size: int
    sqrt2_bound: float
    exact: int | None = None

    @property
    def lower_exceeds_exact(self) -> bool:
        """The n=1 anomaly flag: formula bound above the true optimum."""
        return self.exact is not None and self.lower > self.exact


def bounds_table(n_max: int, *, exact_up_to: int = 0,
                 node_limit: int | None = None,
                 time_limit: float | None = None) -> list[HypercubeBounds]:
    rows = []
    for n in range(1, n_max + 1):
        exact = None
        if n <= exact_up_to:
            exact = exact_value(n, node_limit=node_limit, time_limit=time_limit).value
        rows.append(HypercubeBounds(
            n=n,
            total_weight=total_weight(n),
            lower=lower_bound(n),
            construction_size=len(construction_members(n)),
            sqrt2_bound=2 ** (n / 2),
            exact=exact,
        ))
    return rows


def bounds_csv(rows: list[HypercubeBounds]) -> str:
    """Schema: n, lower, exact (may be empty), construction_size, sqrt2_bound."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "lower", "exact", "construction_size", "sqrt2_bound"])
    for row in rows:
        w.writerow([row.n, row.lower, "" if row.exact is None else row.exact,
                    row.construction_size, f"{row.sqrt2_bound:.6f}"])
    return buf.getvalue()

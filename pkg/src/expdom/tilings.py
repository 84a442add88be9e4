"""Periodic dominating-set tiles and the finite constructions built from them.

Each tile is a period-p cell pattern, one cell per row and per column, that
dominates the wrapped grid of side p (verified exactly). Validity on the
wrapped grid is a sound certificate for the infinite periodic set: wrapped
distances never exceed planar ones, so the wrapped check under-counts what
the infinite tiling delivers.

Cells are (column, row) pairs matching the reference diagrams the patterns
were read from.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .domination import DominationCertificate, check_certificate
from .graphs import TOROIDAL_OF, Family, build_graph

__all__ = [
    "Tile",
    "king_tile",
    "slant_tile",
    "torus_tile",
    "tile_for_family",
    "density",
    "translate",
    "render_ascii",
    "tile_csv",
    "verify_tile",
    "finite_construction",
]


@dataclass(frozen=True)
class Tile:
    """Period-p cell pattern targeting a wrapped grid family."""

    period: int
    cells: tuple[tuple[int, int], ...]  # (col, row), sorted by column
    family: Family

    def __post_init__(self):
        if len(set(self.cells)) != len(self.cells):
            raise ValueError("tile cells must be distinct")
        for c, r in self.cells:
            if not (0 <= c < self.period and 0 <= r < self.period):
                raise ValueError(f"cell {(c, r)} outside [0, {self.period})^2")


def _residue_tile(period: int, step: int, family: Family) -> Tile:
    # one cell per column, rows marching down by `step` from the top row
    cells = tuple((c, (period - 1 - step * c) % period) for c in range(period))
    return Tile(period=period, cells=cells, family=family)


def king_tile() -> Tile:
    """23x23 pattern dominating the wrapped king grid."""
    return _residue_tile(23, 4, Family.TOROIDAL_KING)


def slant_tile() -> Tile:
    """19x19 pattern dominating the wrapped slant grid."""
    return _residue_tile(19, 5, Family.TOROIDAL_SLANT)


def torus_tile() -> Tile:
    """13x13 pattern dominating the torus."""
    return _residue_tile(13, 5, Family.TORUS)


_TILE_BUILDERS = {
    Family.KING: king_tile,
    Family.TOROIDAL_KING: king_tile,
    Family.SLANT: slant_tile,
    Family.TOROIDAL_SLANT: slant_tile,
    Family.STANDARD: torus_tile,
    Family.TORUS: torus_tile,
}


def tile_for_family(family) -> Tile:
    family = Family(family)
    if family not in _TILE_BUILDERS:
        raise ValueError(f"no tile for family {family.value!r}")
    return _TILE_BUILDERS[family]()


def density(tile: Tile) -> Fraction:
    """Cells per area; the asymptotic density the tile certifies."""
    return Fraction(len(tile.cells), tile.period ** 2)


def translate(tile: Tile, dc: int, dr: int) -> Tile:
    """Shift all cells by (dc, dr) modulo the period."""
    p = tile.period
    cells = tuple(sorted(((c + dc) % p, (r + dr) % p) for c, r in tile.cells))
    return Tile(period=p, cells=cells, family=tile.family)


def render_ascii(tile: Tile) -> str:
    """Diagram-oriented ASCII art: highest row on top, 'X' at cells."""
    p = tile.period
    grid = [["."] * p for _ in range(p)]
    for c, r in tile.cells:
        grid[r][c] = "X"
    return "\n".join("".join(grid[r]) for r in range(p - 1, -1, -1)) + "\n"


def tile_csv(tile: Tile) -> str:
    """Period line then one cell per line: col,row."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["period", tile.period])
    w.writerow(["col", "row"])
    for c, r in sorted(tile.cells):
        w.writerow([c, r])
    return buf.getvalue()


def _invalid_certificate(g) -> DominationCertificate:
    return DominationCertificate(
        family=g.family.value, dims=g.dims, members=(),
        weights=[Fraction(0)] * g.n_vertices, valid=False,
        min_weight=Fraction(0), total_excess=Fraction(-g.n_vertices),
        member_coords=(),
    )


def verify_tile(tile: Tile, multiple: int = 1) -> DominationCertificate:
    """Exact certificate for the tile repeated over the wrapped grid of side
    period*multiple.

    Validity here implies the infinite periodic set is dominating (wrapped
    distances under-count planar ones), so this is the sound one-sided check
    for the asymptotic density claims.
    """
    if multiple < 1:
        raise ValueError("multiple must be >= 1")
    side = tile.period * multiple
    g = build_graph(tile.family, side)
    if not tile.cells:
        return _invalid_certificate(g)
    members = [
        (r + tile.period * bi) * side + (c + tile.period * bj)
        for bi in range(multiple)
        for bj in range(multiple)
        for c, r in tile.cells
    ]
    return check_certificate(g, members)


def finite_construction(family, n: int, *, wrap: bool = True) -> DominationCertificate:
    """Dominating set for an n x n grid: tile the largest p*q block, then add
    every vertex outside it. Writes n = p*q + rem, giving exactly
    p*q^2 + 2*p*q*rem + rem^2 members.

    With ``wrap=True`` (default) the certificate is checked on the wrapped
    grid of side n, the sound reading for the periodic upper-bound counts.
    ``wrap=False`` checks the planar grid instead and honestly reports the
    invalid profile: a planar corner keeps only one quadrant of tile copies
    and there is no outside band when rem = 0, so the literal planar set
    falls short near the corners.
    """
    family = Family(family)
    if family not in (Family.KING, Family.SLANT):
        raise ValueError("finite constructions exist for the king and slant families")
    tile = tile_for_family(family)
    p = tile.period
    if n < p:
        raise ValueError(f"n must be at least the tile period {p}")
    q, rem = divmod(n, p)
    members = set()
    for bi in range(q):
        for bj in range(q):
            for c, r in tile.cells:
                members.add((r + p * bi) * n + (c + p * bj))
    block = p * q
    for row in range(n):
        for col in range(n):
            if row >= block or col >= block:
                members.add(row * n + col)
    expected = p * q * q + 2 * p * q * rem + rem * rem
    if len(members) != expected:
        raise ArithmeticError(f"construction size {len(members)} != {expected}")
    g = build_graph(TOROIDAL_OF[family] if wrap else family, n)
    return check_certificate(g, members)

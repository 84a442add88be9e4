"""Graph families with closed-form metrics: grids, their king/slant/toroidal
variants, and the binary hypercube.

Vertices are canonical integer indices: row-major ``r * cols + c`` for the
grid families, the numeric value of the bit string for the hypercube. Graphs
are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import threading
from collections import deque
from enum import Enum

import numpy as np

__all__ = [
    "Family",
    "Graph",
    "build_graph",
    "bfs_distances",
    "sphere",
]

# Full pairwise distance matrices are memoized only up to this many vertices;
# larger graphs fall back to per-row computation.
DISTANCE_MATRIX_CAP = 4096


class Family(str, Enum):
    STANDARD = "standard"
    KING = "king"
    SLANT = "slant"
    TORUS = "torus"
    TOROIDAL_KING = "toroidal-king"
    TOROIDAL_SLANT = "toroidal-slant"
    HYPERCUBE = "hypercube"


_WRAPPED = {Family.TORUS, Family.TOROIDAL_KING, Family.TOROIDAL_SLANT}

# Wrapped counterpart used when a periodic certificate is requested.
TOROIDAL_OF = {
    Family.STANDARD: Family.TORUS,
    Family.KING: Family.TOROIDAL_KING,
    Family.SLANT: Family.TOROIDAL_SLANT,
    Family.TORUS: Family.TORUS,
    Family.TOROIDAL_KING: Family.TOROIDAL_KING,
    Family.TOROIDAL_SLANT: Family.TOROIDAL_SLANT,
}


def _slant_form(dr, dc):
    """Steps needed on the slant grid for a displacement (works on arrays).

    Diagonal steps run along (+1,+1)/(-1,-1) only, so same-sign displacements
    cost the Chebyshev distance and opposite-sign ones the Manhattan distance.
    """
    same = (dr * dc) >= 0
    return np.where(same, np.maximum(abs(dr), abs(dc)), abs(dr) + abs(dc))


class Graph:
    """A graph from one of the supported families.

    Use :func:`build_graph` or the family helpers instead of constructing
    directly. ``dims`` is ``(n,)`` (square grid side or hypercube dimension)
    or ``(rows, cols)`` for rectangular grid families.
    """

    def __init__(self, family: Family, dims):
        family = Family(family)
        dims = tuple(int(d) for d in (dims if isinstance(dims, (tuple, list)) else (dims,)))
        if not dims or len(dims) > 2 or any(d < 1 for d in dims):
            raise ValueError(f"dims must be one or two positive integers, got {dims!r}")
        self.family = family
        self.dims = dims
        if family is Family.HYPERCUBE:
            if len(dims) != 1:
                raise ValueError("hypercube takes a single dimension")
            self.nbits = dims[0]
            self.n_vertices = 1 << self.nbits
            self.rows = self.cols = None
        else:
            self.rows = dims[0]
            self.cols = dims[1] if len(dims) == 2 else dims[0]
            self.n_vertices = self.rows * self.cols
            self.nbits = None
            # vectorized coordinate lookup tables, row-major order
            self._vr = np.arange(self.n_vertices) // self.cols
            self._vc = np.arange(self.n_vertices) % self.cols
        self._dist_matrix = None
        self._dist_lock = threading.Lock()

    # ------------------------------------------------------------------
    # vertex indexing

    def index(self, coord) -> int:
        """Canonical index of a coordinate pair (grids) or bit string (hypercube)."""
        if self.family is Family.HYPERCUBE:
            if isinstance(coord, str):
                if len(coord) != self.nbits:
                    raise ValueError(f"bit string must have length {self.nbits}")
                return int(coord, 2)
            return int(coord)
        r, c = coord
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise ValueError(f"coordinate {coord!r} out of range")
        return r * self.cols + c

    def coord(self, v: int):
        """Coordinate pair of a vertex, or its bit string for the hypercube."""
        self._check_vertex(v)
        if self.family is Family.HYPERCUBE:
            return format(v, f"0{self.nbits}b")
        return divmod(v, self.cols)

    def _check_vertex(self, v: int):
        if not (0 <= v < self.n_vertices):
            raise ValueError(f"vertex {v} out of range [0, {self.n_vertices})")

    # ------------------------------------------------------------------
    # adjacency

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        if self.family is Family.HYPERCUBE:
            return [v ^ (1 << b) for b in range(self.nbits)]
        r, c = divmod(v, self.cols)
        steps = [(-1, 0), (1, 0), (0, -1), (0, 1)]
        if self.family in (Family.KING, Family.TOROIDAL_KING):
            steps += [(-1, -1), (-1, 1), (1, -1), (1, 1)]
        elif self.family in (Family.SLANT, Family.TOROIDAL_SLANT):
            steps += [(1, 1), (-1, -1)]
        out = []
        wrap = self.family in _WRAPPED
        for dr, dc in steps:
            nr, nc = r + dr, c + dc
            if wrap:
                nr %= self.rows
                nc %= self.cols
            elif not (0 <= nr < self.rows and 0 <= nc < self.cols):
                continue
            w = nr * self.cols + nc
            if w != v:  # wrapped step can land on v itself when a side is 1 or 2
                out.append(w)
        return sorted(set(out))

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def edges(self):
        """Iterate edges as (u, v) pairs with u < v, sorted."""
        for u in range(self.n_vertices):
            for w in self.neighbors(u):
                if u < w:
                    yield (u, w)

    def edge_count(self) -> int:
        return sum(1 for _ in self.edges())

    # ------------------------------------------------------------------
    # metric

    def distance(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        if self.family is Family.HYPERCUBE:
            return (u ^ v).bit_count()
        r1, c1 = divmod(u, self.cols)
        r2, c2 = divmod(v, self.cols)
        return int(self._grid_dist(r2 - r1, c2 - c1))

    def _grid_dist(self, dr, dc):
        """Closed-form distance for a (possibly array) displacement."""
        fam = self.family
        if fam is Family.STANDARD:
            return abs(dr) + abs(dc)
        if fam is Family.KING:
            return np.maximum(abs(dr), abs(dc))
        if fam is Family.SLANT:
            return _slant_form(dr, dc)
        if fam is Family.TORUS:
            wr = np.minimum(dr % self.rows, (-dr) % self.rows)
            wc = np.minimum(dc % self.cols, (-dc) % self.cols)
            return wr + wc
        if fam is Family.TOROIDAL_KING:
            wr = np.minimum(dr % self.rows, (-dr) % self.rows)
            wc = np.minimum(dc % self.cols, (-dc) % self.cols)
            return np.maximum(wr, wc)
        if fam is Family.TOROIDAL_SLANT:
            # minimum over the four displacement classes of the unwrapped form
            pr, pc = dr % self.rows, dc % self.cols
            best = None
            for a in (pr, pr - self.rows):
                for b in (pc, pc - self.cols):
                    d = _slant_form(a, b)
                    best = d if best is None else np.minimum(best, d)
            return best
        raise AssertionError(fam)

    def distance_row(self, v: int) -> np.ndarray:
        """Distances from v to every vertex, as an int array."""
        self._check_vertex(v)
        if self.family is Family.HYPERCUBE:
            x = np.arange(self.n_vertices, dtype=np.int64) ^ v
            d = np.zeros(self.n_vertices, dtype=np.int64)
            for b in range(self.nbits):
                d += (x >> b) & 1
            return d
        r, c = divmod(v, self.cols)
        return np.asarray(self._grid_dist(self._vr - r, self._vc - c), dtype=np.int64)

    def distance_matrix(self) -> np.ndarray:
        """Full pairwise distance matrix, memoized (race-free single init)."""
        if self._dist_matrix is None:
            with self._dist_lock:
                if self._dist_matrix is None:
                    if self.n_vertices > DISTANCE_MATRIX_CAP:
                        raise ValueError(
                            f"distance matrix capped at {DISTANCE_MATRIX_CAP} vertices; "
                            f"graph has {self.n_vertices} (use distance_row)"
                        )
                    m = np.empty((self.n_vertices, self.n_vertices), dtype=np.int16)
                    for v in range(self.n_vertices):
                        m[v] = self.distance_row(v)
                    m.setflags(write=False)
                    self._dist_matrix = m
        return self._dist_matrix

    def diameter(self) -> int:
        return max(int(self.distance_row(v).max()) for v in range(self.n_vertices))

    # ------------------------------------------------------------------
    # serialization

    def to_edge_list(self) -> str:
        """Plain-text edge list: header '#family n [m]', then 'u v' per line."""
        header = "#" + self.family.value + " " + " ".join(str(d) for d in self.dims)
        lines = [header]
        lines += [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"Graph({self.family.value}, dims={self.dims}, n={self.n_vertices})"


def build_graph(family, dims) -> Graph:
    """Construct a graph of the given family; rejects non-positive dims."""
    return Graph(family, dims)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Breadth-first distances from source; the oracle the closed forms are
    validated against."""
    g._check_vertex(source)
    dist = [-1] * g.n_vertices
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        du = dist[u]
        for w in g.neighbors(u):
            if dist[w] < 0:
                dist[w] = du + 1
                q.append(w)
    return dist


def sphere(g: Graph, v: int, k: int) -> set[int]:
    """All vertices at distance exactly k from v."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    row = g.distance_row(v)
    return set(np.flatnonzero(row == k).tolist())

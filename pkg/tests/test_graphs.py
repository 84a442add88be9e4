import random
import threading

import numpy as np
import pytest

from expdom.graphs import Family, bfs_distances, build_graph, sphere

GRID_FAMILIES = [
    Family.STANDARD,
    Family.KING,
    Family.SLANT,
    Family.TORUS,
    Family.TOROIDAL_KING,
    Family.TOROIDAL_SLANT,
]


def test_rejects_bad_dims():
    for dims in (0, -1, (0, 3), (3, 0), (2, 3, 4), ()):
        with pytest.raises(ValueError):
            build_graph(Family.KING, dims)
    with pytest.raises(ValueError):
        build_graph(Family.HYPERCUBE, (2, 2))


def test_king_5_degrees():
    g = build_graph(Family.KING, 5)
    assert g.n_vertices == 25
    assert g.degree(g.index((0, 0))) == 3
    assert g.degree(g.index((2, 2))) == 8


def test_slant_5_edges_match_definition():
    g = build_graph(Family.SLANT, 5)
    assert g.n_vertices == 25
    # independent enumeration: grid edges plus one diagonal per unit cell
    expected = set()
    for i in range(5):
        for j in range(5):
            if i + 1 < 5:
                expected.add((g.index((i, j)), g.index((i + 1, j))))
            if j + 1 < 5:
                expected.add((g.index((i, j)), g.index((i, j + 1))))
            if i + 1 < 5 and j + 1 < 5:
                expected.add((g.index((i, j)), g.index((i + 1, j + 1))))
    expected = {(min(u, v), max(u, v)) for u, v in expected}
    assert set(g.edges()) == expected
    assert len(expected) == 2 * 5 * 4 + 16 == 56


def test_hypercube_4_shape():
    g = build_graph(Family.HYPERCUBE, 4)
    assert g.n_vertices == 16
    assert g.edge_count() == 32
    assert all(g.degree(v) == 4 for v in range(16))


def test_distance_examples():
    king = build_graph(Family.KING, 5)
    assert king.distance(king.index((0, 0)), king.index((2, 1))) == 2
    q4 = build_graph(Family.HYPERCUBE, 4)
    assert q4.distance(q4.index("0000"), q4.index("0110")) == 2
    slant = build_graph(Family.SLANT, 7)
    u, v = slant.index((3, 3)), slant.index((1, 5))
    assert slant.distance(u, v) == 4
    assert bfs_distances(slant, u)[v] == 4


def test_sphere_examples():
    king = build_graph(Family.KING, 9)
    center = king.index((4, 4))
    assert len(sphere(king, center, 2)) == 16
    assert sphere(king, center, 0) == {center}
    slant = build_graph(Family.SLANT, 9)
    c = slant.index((4, 4))
    ring = sphere(slant, c, 1)
    assert len(ring) == 6
    bfs = bfs_distances(slant, c)
    assert ring == {v for v, d in enumerate(bfs) if d == 1}


@pytest.mark.parametrize("family", GRID_FAMILIES)
@pytest.mark.parametrize("dims", [2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, (2, 5), (3, 7), (1, 6)])
def test_closed_form_equals_bfs_grids(family, dims):
    g = build_graph(family, dims)
    for v in range(g.n_vertices):
        assert np.array_equal(g.distance_row(v), np.array(bfs_distances(g, v)))


@pytest.mark.parametrize("n", range(1, 8))
def test_closed_form_equals_bfs_hypercube(n):
    g = build_graph(Family.HYPERCUBE, n)
    for v in range(g.n_vertices):
        assert np.array_equal(g.distance_row(v), np.array(bfs_distances(g, v)))


@pytest.mark.parametrize("family", GRID_FAMILIES + [Family.HYPERCUBE])
def test_metric_properties(family):
    dims = 5 if family is not Family.HYPERCUBE else 5
    g = build_graph(family, dims)
    rng = random.Random(20240517)
    for _ in range(200):
        u, v, w = (rng.randrange(g.n_vertices) for _ in range(3))
        assert g.distance(u, v) == g.distance(v, u)
        assert (g.distance(u, v) == 0) == (u == v)
        assert g.distance(u, w) <= g.distance(u, v) + g.distance(v, w)


@pytest.mark.parametrize("family", GRID_FAMILIES + [Family.HYPERCUBE])
def test_sphere_sizes_partition(family):
    g = build_graph(family, 6 if family is not Family.HYPERCUBE else 5)
    for v in (0, g.n_vertices // 2, g.n_vertices - 1):
        total = sum(len(sphere(g, v, k)) for k in range(g.diameter() + 1))
        assert total == g.n_vertices


@pytest.mark.parametrize("planar,wrapped", [
    (Family.STANDARD, Family.TORUS),
    (Family.KING, Family.TOROIDAL_KING),
    (Family.SLANT, Family.TOROIDAL_SLANT),
])
def test_toroidal_distance_never_exceeds_planar(planar, wrapped):
    gp = build_graph(planar, 7)
    gt = build_graph(wrapped, 7)
    dp = gp.distance_matrix()
    dt = gt.distance_matrix()
    assert (dt <= dp).all()


def test_edge_list_format():
    g = build_graph(Family.KING, 3)
    text = g.to_edge_list()
    lines = text.strip().split("\n")
    assert lines[0] == "#king 3"
    assert len(lines) == 1 + g.edge_count()
    pairs = [tuple(map(int, ln.split())) for ln in lines[1:]]
    assert pairs == sorted(pairs)
    assert all(u < v for u, v in pairs)
    rect = build_graph(Family.TORUS, (3, 5))
    assert rect.to_edge_list().startswith("#torus 3 5\n")


def test_index_coord_bijection():
    for family, dims in [(Family.SLANT, (4, 6)), (Family.HYPERCUBE, 4)]:
        g = build_graph(family, dims)
        for v in range(g.n_vertices):
            assert g.index(g.coord(v)) == v
    g = build_graph(Family.KING, 4)
    with pytest.raises(ValueError):
        g.coord(16)
    with pytest.raises(ValueError):
        g.index((4, 0))


def test_distance_matrix_memoized_and_race_free():
    g = build_graph(Family.TORUS, 8)
    results = []

    def grab():
        results.append(g.distance_matrix())

    threads = [threading.Thread(target=grab) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(m is results[0] for m in results)
    assert not results[0].flags.writeable


def test_distance_matrix_cap():
    g = build_graph(Family.STANDARD, (65, 65))
    with pytest.raises(ValueError):
        g.distance_matrix()
    # per-row computation still works above the cap
    assert g.distance_row(0)[g.n_vertices - 1] == 64 + 64

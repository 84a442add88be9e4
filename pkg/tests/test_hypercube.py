from fractions import Fraction

import pytest

from expdom.graphs import Family, build_graph
from expdom.domination import check_certificate
from expdom.hypercube import (
    bounds_csv,
    bounds_table,
    construction_members,
    doubling_construction,
    exact_value,
    lower_bound,
    total_weight,
    total_weight_bruteforce,
)


@pytest.mark.parametrize("n", range(1, 11))
def test_total_weight_matches_bruteforce(n):
    assert total_weight(n) == total_weight_bruteforce(n)


def test_total_weight_values():
    assert total_weight(1) == 3
    assert total_weight(2) == Fraction(9, 2)
    assert total_weight(6) == Fraction(729, 32)


def test_total_weight_rejects_small_n():
    with pytest.raises(ValueError):
        total_weight(0)


def test_lower_bound_values():
    assert [lower_bound(n) for n in range(1, 8)] == [2, 2, 2, 2, 3, 4, 5]
    assert lower_bound(2) == -(-32 // 23)
    assert lower_bound(4) == -(-128 // 64)


def test_lower_bound_denominator_stays_positive():
    for n in range(1, 31):
        assert lower_bound(n) >= 1


def test_construction_sizes_follow_doubling():
    sizes = [len(construction_members(n)) for n in range(1, 11)]
    assert sizes == [1, 2, 2, 4, 4, 8, 8, 16, 16, 32]
    for n in range(3, 11):
        assert sizes[n - 1] == 2 * sizes[n - 3]
        assert sizes[n - 1] <= 2 ** ((n + 1) // 2)


def test_construction_base_cases():
    assert construction_members(1) == (0,)
    assert construction_members(2) == (0, 3)
    cert = doubling_construction(2)
    assert cert.weights == [Fraction(5, 2), Fraction(2), Fraction(2), Fraction(5, 2)]


@pytest.mark.parametrize("n", range(1, 11))
def test_construction_valid(n):
    cert = doubling_construction(n)
    assert cert.valid
    assert cert.size() == 2 ** (n // 2)


@pytest.mark.parametrize("n", range(3, 9))
def test_one_layer_feeds_neighbor_layers(n):
    # members in the low-bits-00 subcube send each vertex of the adjacent
    # 01 and 10 subcubes at least 1/2
    g = build_graph(Family.HYPERCUBE, n)
    members = [v << 2 for v in construction_members(n - 2)]
    cert = check_certificate(g, members)
    for v in range(g.n_vertices):
        if v & 3 in (1, 2):
            assert cert.weights[v] >= Fraction(1, 2)


def test_exact_small_values():
    assert exact_value(1).value == 1
    assert exact_value(2).value == 2
    assert exact_value(3).value == 2
    assert exact_value(4).value == 2


def test_exact_dimension_cap():
    with pytest.raises(ValueError):
        exact_value(8)


def test_anomaly_is_flagged_not_corrected():
    rows = bounds_table(2, exact_up_to=2)
    assert rows[0].lower == 2 and rows[0].exact == 1
    assert rows[0].lower_exceeds_exact
    assert rows[1].lower == 2 and rows[1].exact == 2
    assert not rows[1].lower_exceeds_exact


def test_bounds_table_and_csv():
    rows = bounds_table(6, exact_up_to=4)
    for row in rows:
        if row.exact is not None and row.n > 1:
            assert row.lower <= row.exact <= row.construction_size
    text = bounds_csv(rows)
    lines = text.strip().split("\n")
    assert lines[0] == "n,lower,exact,construction_size,sqrt2_bound"
    assert lines[1].startswith("1,2,1,1,")
    assert lines[5].startswith("5,3,,4,")

import pytest

from netrecon.errors import BudgetExceeded, UnknownFixture
from netrecon.fixtures import FIXTURE_NAMES, fig2_pair, fig3_pair
from netrecon.formats import format_network
from netrecon.isomorphism import certificate, is_isomorphic
from netrecon.network import network_level
from netrecon.oracle import (
    EnumSpec,
    collision_scan,
    enumerate_networks,
    fixtures,
    hang_k4,
    naive_networks,
    random_level2_networks,
)


def _enum(labels, edges, level):
    return list(enumerate_networks(EnumSpec(tuple(labels), edges, level)))


@pytest.mark.parametrize("labels, want", [("xy", 1), ("xyz", 1), ("abcd", 3)])
def test_tree_counts(labels, want):
    n = len(labels)
    assert len(_enum(labels, 2 * n - 3, 0)) == want


def test_two_leaf_level2():
    nets = _enum("xy", 20, 2)
    assert len(nets) == 4
    assert sorted(n.num_edges for n in nets) == [1, 7, 13, 19]


@pytest.mark.parametrize(
    "labels, edges, level",
    [("ab", 13, 2), ("abc", 12, 2), ("abcd", 11, 2), ("abcde", 10, 1), ("abcdef", 9, 2), ("abc", 12, 3)],
)
def test_matches_naive(labels, edges, level):
    grown = {certificate(n) for n in _enum(labels, edges, level)}
    naive = {certificate(n) for n in naive_networks(labels, edges, level)}
    assert grown == naive


def test_respects_budgets():
    nets = _enum("abcd", 14, 2)
    assert all(n.num_edges <= 14 and network_level(n) <= 2 for n in nets)
    assert len({certificate(n) for n in nets}) == len(nets)


def test_output_is_deterministic():
    a = [format_network(n) for n in _enum("abc", 12, 2)]
    b = [format_network(n) for n in _enum("cab", 12, 2)]
    assert a == b


def test_edge_cap():
    with pytest.raises(ValueError):
        EnumSpec(("a", "b"), 10_000, 2)


def test_store_cap():
    with pytest.raises(BudgetExceeded):
        list(enumerate_networks(EnumSpec(("a", "b", "c", "d"), 12, 2, cap=5)))


def test_k4_move_is_level3():
    net = hang_k4(fig2_pair()[0], ("u1", "v4"))
    assert network_level(net) == 3


def test_random_networks():
    nets = random_level2_networks(20, seed=7)
    assert len(nets) == 20
    assert all(network_level(n) == 2 and n.num_edges <= 30 for n in nets)
    again = random_level2_networks(20, seed=7)
    assert [certificate(n) for n in nets] == [certificate(n) for n in again]


def test_fixtures():
    for name in FIXTURE_NAMES:
        got = fixtures(name)
        if name.endswith("_pair"):
            assert len(got) == 2 and not is_isomorphic(*got)
    with pytest.raises(UnknownFixture):
        fixtures("fig9")


def test_no_collisions_small_level1():
    assert len(collision_scan(_enum("abcd", 14, 1), "shortest")) == 0


def test_no_collisions_small_level2():
    assert len(collision_scan(_enum("abcd", 14, 2), "multiset")) == 0


def test_shortest_collides_at_level2():
    report = collision_scan(_enum("abcd", 14, 2), "shortest")
    assert len(report.groups) == 3
    assert "kind: shortest" in report.format()


def test_figure_pairs_collide():
    assert len(collision_scan(fig2_pair(), "shortest")) == 1
    assert len(collision_scan(fig2_pair(), "multiset")) == 0
    assert len(collision_scan(fig3_pair(), "multiset")) == 1


def test_scan_ignores_duplicates():
    left, _ = fig2_pair()
    assert len(collision_scan([left, left], "shortest")) == 0
    with pytest.raises(ValueError):
        collision_scan([left], "median")

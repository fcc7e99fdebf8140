import pytest
from hypothesis import given, settings

from conftest import networks, nx_matrix
from netrecon.distances import Adjacency, Chain, adjacency, chains, cherries, multiset_matrix, shortest_matrix
from netrecon.errors import InconsistentChains
from netrecon.fixtures import fig1, fig2_pair
from netrecon.level2 import reduce_cherry
from netrecon.multiset import DistanceMultiset as M
from netrecon.network import Network
from netrecon.oracle import EnumSpec, enumerate_networks
from netrecon.templates import cycle_network, star

FIG1 = {
    ("a", "b"): M([3, 6, 6]),
    ("a", "c"): M([4, 5, 6, 7]),
    ("a", "d"): M([5, 6, 7, 8]),
    ("a", "e"): M([5, 6, 7, 8]),
    ("b", "c"): M([4, 5, 6, 7]),
    ("b", "d"): M([5, 6, 7, 8]),
    ("b", "e"): M([5, 6, 7, 8]),
    ("c", "d"): M([5, 5, 8, 8]),
    ("c", "e"): M([5, 5, 8, 8]),
    ("d", "e"): M([2]),
}


def test_fig1_table():
    mm = multiset_matrix(fig1())
    assert dict(mm.pairs()) == FIG1
    sm = shortest_matrix(fig1())
    assert dict(sm.pairs()) == {k: v.min() for k, v in FIG1.items()}


def test_fig1_against_networkx_paths():
    assert multiset_matrix(fig1()) == nx_matrix(fig1())


def test_symmetric_lookup():
    mm = multiset_matrix(fig1())
    assert mm["e", "d"] == mm["d", "e"]
    assert mm["a", "a"] == M([0])
    with pytest.raises(KeyError):
        mm["a", "q"]


def test_fig2_shortest_agree():
    left, right = fig2_pair()
    assert shortest_matrix(left) == shortest_matrix(right)
    assert multiset_matrix(left)["a", "b"] == M([3, 5, 6])
    assert multiset_matrix(left)["c", "d"] == M([3, 4])


def test_min_is_shortest_on_enumeration():
    for net in enumerate_networks(EnumSpec(("a", "b", "c", "d"), 16, 2)):
        assert multiset_matrix(net).shortest() == shortest_matrix(net)


@settings(max_examples=60, deadline=None)
@given(networks(max_leaves=5, max_moves=3))
def test_multiset_matches_networkx(net):
    assert multiset_matrix(net) == nx_matrix(net)


def test_cherries():
    assert cherries(multiset_matrix(fig1())) == [("d", "e")]
    assert cherries(shortest_matrix(star("a", "b", "c"))) == [("a", "b"), ("a", "c"), ("b", "c")]


def test_fig1_chains_and_adjacency():
    mm, step = reduce_cherry(multiset_matrix(fig1()), "d", "e", "z")
    assert step.z == "z"
    found = chains(mm)
    assert [c.leaves for c in found] == [("a", "b"), ("c",), ("z",)]
    ab, c, z = found
    assert adjacency(mm, ab, c) == Adjacency.TWICE
    assert adjacency(mm, ab, z) == Adjacency.TWICE
    assert adjacency(mm, c, z) == Adjacency.TWICE
    assert mm["a", "z"] == M([4, 5, 6, 7])


def test_cyclic_chain():
    (ch,) = chains(shortest_matrix(cycle_network(["d", "b", "a", "c"])))
    assert ch.cyclic
    assert ch.leaves == ("a", "b", "d", "c")


def test_chain_orientation():
    net = cycle_network(["z", "c", "b", "a"])
    sm = shortest_matrix(net).restrict("abcz")
    found = chains(sm)
    assert found[0].leaves[0] == "a"


def test_inconsistent_chains():
    # a star centre where each leaf sits 3 from three others is not a network
    labels = "abcd"
    cells = {(x, y): 3 for i, x in enumerate(labels) for y in labels[i + 1:]}
    from netrecon.distances import ShortestMatrix

    with pytest.raises(InconsistentChains):
        chains(ShortestMatrix(labels, cells))


def test_chain_helpers():
    ch = Chain(("a", "b", "c"))
    assert ch.endpoints == ("a", "c")
    assert Chain(("a",)).endpoints == ("a",)
    assert ch.reversed().leaves == ("c", "b", "a")


def test_two_leaf_matrix():
    mm = multiset_matrix(Network([("x", "y")], "xy"))
    assert mm["x", "y"] == M([1])

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import networks
from netrecon.errors import BadDegree, Disconnected, InvalidTarget, NotACutEdge, NotSimple, UnlabeledLeaf
from netrecon.fixtures import fig1, fig2_pair, fig3_pair
from netrecon.isomorphism import is_isomorphic
from netrecon.network import (
    Network,
    add_bridge,
    attach_leaf,
    blobs,
    collapse_pendant_blob,
    cut_edge_partition,
    cut_edges,
    delete_edge,
    delete_leaf,
    leaf_attachment_edge,
    network_level,
    pendant_template,
    replace_leaf,
    singleton,
    validate,
)
from netrecon.oracle import EnumSpec, enumerate_networks
from netrecon.templates import cycle_network, star


@pytest.fixture(scope="module")
def small_l2():
    return list(enumerate_networks(EnumSpec(("a", "b", "c", "d"), 14, 2)))


class TestValidate:
    def test_wrong_degree(self):
        with pytest.raises(BadDegree):
            validate([("a", "p"), ("b", "p"), ("c", "p"), ("d", "p")], "abcd")

    def test_unlabelled_leaf(self):
        with pytest.raises(UnlabeledLeaf):
            validate([("a", "p"), ("b", "p"), ("q", "p")], "ab")

    def test_labelled_internal_vertex(self):
        with pytest.raises(BadDegree):
            validate([("a", "p"), ("b", "p"), ("c", "p")], "abcp")

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            validate([("a", "b"), ("c", "d")], "abcd")

    def test_singleton_and_edge(self):
        assert singleton("x").num_edges == 0
        assert validate([("x", "y")], "xy").num_edges == 1

    def test_loops_rejected(self):
        with pytest.raises((NotSimple, BadDegree)):
            validate([("a", "p"), ("p", "p")], "a")


def test_blobs_of_a_tree():
    assert blobs(star("a", "b", "c")) == []
    assert network_level(star("a", "b", "c")) == 0


def test_fig1_blob():
    (b,) = blobs(fig1())
    assert b.level == 2
    assert b.pendant
    assert b.leaves == ("a", "b", "c")


def test_fig2_blobs():
    left, _ = fig2_pair()
    levels = sorted(b.level for b in blobs(left))
    assert levels == [1, 2]
    assert all(b.pendant for b in blobs(left))


def test_fig3_level():
    assert {network_level(n) for n in fig3_pair()} == {3}


def test_cut_edge_partition():
    assert cut_edge_partition(fig1(), ("v2", "v3")) == (frozenset("abc"), frozenset("de"))
    left, _ = fig2_pair()
    assert cut_edge_partition(left, ("u1", "v4")) == (frozenset("ab"), frozenset("cd"))
    assert cut_edge_partition(fig1(), ("v3", "d")) == (frozenset("abce"), frozenset("d"))


def test_cut_edge_partition_on_cycle():
    with pytest.raises(NotACutEdge):
        cut_edge_partition(fig1(), ("v4", "v1"))


def test_cut_edges_of_fig1():
    got = cut_edges(fig1())
    assert ("v2", "v3") in got
    assert len(got) == 6  # five leaf edges plus the one joining the blob to v3


def test_handshake(small_l2):
    for net in small_l2:
        g = net.to_networkx()
        assert sum(d for _, d in g.degree()) == 2 * net.num_edges
        r = net.num_edges - len(g) + 1
        assert len(net.internal_vertices) == len(net.leaves) - 2 + 2 * r


def _greedy_level(net, blob):
    """Delete non-bridge edges until the blob is a tree; count deletions."""
    g = nx.Graph(list(blob.edges))
    removed = 0
    while True:
        spare = [e for e in g.edges if e not in set(nx.bridges(g))]
        if not spare:
            return removed
        g.remove_edge(*spare[0])
        removed += 1


def test_level_matches_greedy_deletion(small_l2):
    for net in small_l2[::7]:
        for b in blobs(net):
            assert b.level == _greedy_level(net, b)


def test_leaf_round_trip(small_l2):
    done = 0
    for net in small_l2:
        for x in net.labels:
            e = leaf_attachment_edge(net, x)
            try:
                smaller = delete_leaf(net, x)
            except NotSimple:
                continue  # x sat on a triangle
            assert is_isomorphic(attach_leaf(smaller, e, x), net)
            done += 1
    assert done > 200


def test_pendant_collapse_round_trip(small_l2):
    checked = 0
    for net in small_l2:
        for b in blobs(net):
            if not b.pendant:
                continue
            t = pendant_template(net, b, "z")
            small = collapse_pendant_blob(net, b, "z")
            assert "z" in small.leaves and not set(b.leaves) & small.leaves
            assert is_isomorphic(replace_leaf(small, "z", t), net)
            checked += 1
    assert checked > 50


def test_delete_leaf_errors():
    with pytest.raises(InvalidTarget):
        delete_leaf(singleton("x"), "x")
    with pytest.raises(InvalidTarget):
        delete_leaf(fig1(), "v0")


def test_attach_to_singleton():
    net = attach_leaf(singleton("x"), None, "y")
    assert net.edges == (("x", "y"),)


def test_replace_leaf_clash():
    with pytest.raises(InvalidTarget):
        replace_leaf(cycle_network(["a", "b", "z"]), "z", cycle_network(["a", "c", "z"]))


def test_delete_edge_undoes_bridge():
    tri = cycle_network(["a", "b", "c"])
    grown = add_bridge(tri, ("#p0", "#p1"), ("#p1", "#p2"))
    assert network_level(grown) == 2
    (b,) = blobs(grown)
    new = [e for e in b.edges if set(e) - set(tri.vertices) == set(e)]
    assert is_isomorphic(delete_edge(grown, new[0]), tri)


def test_bridge_parallel_edge():
    with pytest.raises(InvalidTarget):
        add_bridge(fig1(), ("v4", "v1"), ("v1", "v4"))


@settings(max_examples=60, deadline=None)
@given(networks())
def test_relabel_internal_keeps_class(net):
    ids = net.internal_vertices
    moved = net.relabel({v: f"w{v}" for v in ids})
    assert is_isomorphic(net, moved)
    assert network_level(moved) == network_level(net)


@settings(max_examples=60, deadline=None)
@given(networks())
def test_generated_networks_are_valid(net):
    Network(net.edges, net.leaves)
    assert network_level(net) <= 2

from __future__ import annotations

import itertools

import networkx as nx
import pytest
from hypothesis import strategies as st

from netrecon.distances import MultisetMatrix
from netrecon.multiset import DistanceMultiset
from netrecon.network import Network, add_bridge, attach_leaf, network_level, replace_leaf
from netrecon.oracle import insert_blob
from netrecon.templates import BlobForm, cycle_network, theta_network


def nx_paths(net: Network, x: str, y: str) -> DistanceMultiset:
    """Simple-path lengths between two leaves, straight from networkx."""
    g = net.to_networkx()
    inner = set(net.leaves)
    return DistanceMultiset(
        len(p) - 1 for p in nx.all_simple_paths(g, x, y) if not inner & set(p[1:-1])
    )


def nx_matrix(net: Network) -> MultisetMatrix:
    labels = net.labels
    return MultisetMatrix(labels, {(x, y): nx_paths(net, x, y) for x, y in itertools.combinations(labels, 2)})


def nx_label_iso(n1: Network, n2: Network) -> bool:
    """Leaf-label-preserving isomorphism via VF2."""
    g1, g2 = n1.to_networkx(), n2.to_networkx()
    for g, net in ((g1, n1), (g2, n2)):
        for v in g:
            g.nodes[v]["tag"] = v if net.is_leaf(v) else None
    return nx.is_isomorphic(g1, g2, node_match=lambda a, b: a["tag"] == b["tag"])


def shuffle_internal(net: Network, seed: int) -> Network:
    import random

    ids = net.internal_vertices
    new = [f"q{i}" for i in range(len(ids))]
    random.Random(seed).shuffle(new)
    return net.relabel(dict(zip(ids, new)))


@st.composite
def networks(draw, max_leaves: int = 6, max_moves: int = 4, max_level: int = 2, min_leaves: int = 2):
    """Random valid networks grown by leaf, bridge and blob moves."""
    n = draw(st.integers(min_leaves, max_leaves))
    labels = [f"x{i}" for i in range(n)]
    net = Network([(labels[0], labels[1])], labels[:2])
    for x in labels[2:]:
        net = attach_leaf(net, draw(st.sampled_from(net.edges)), x)
    for _ in range(draw(st.integers(0, max_moves))):
        if draw(st.booleans()) and max_level >= 2:
            cand = insert_blob(net, draw(st.sampled_from(net.edges)))
        elif net.num_edges >= 2:
            e1, e2 = draw(st.lists(st.sampled_from(net.edges), min_size=2, max_size=2, unique=True))
            cand = add_bridge(net, e1, e2)
        else:
            continue
        if network_level(cand) <= max_level:
            net = cand
    return net


def host_triangle(form: BlobForm) -> Network:
    return replace_leaf(cycle_network(["h1", "h2", "z"]), "z", form.template("z"))


@pytest.fixture
def two_cycles() -> Network:
    """Two triangles joined by a cut-edge, leaves a,b on one and c,d on the other."""
    left = cycle_network(["a", "b", "z"])
    return replace_leaf(left, "z", cycle_network(["c", "d", "z"]))


@pytest.fixture
def bridge_leaf_net() -> Network:
    """Leaf x on the cut-edge path between two pendant triangles."""
    net = Network([("p", "x"), ("p", "l"), ("p", "r")], ["x", "l", "r"])
    net = replace_leaf(net, "l", cycle_network(["a", "b", "l"]))
    return replace_leaf(net, "r", cycle_network(["c", "d", "r"]))


@pytest.fixture
def lone_leaf_k000() -> Network:
    """Leaf a alone on a pendant level-2 blob, two blobs away from the rest."""
    net = replace_leaf(cycle_network(["h1", "h2", "z"]), "z", theta_network(["w"], ["z"], []))
    return replace_leaf(net, "w", BlobForm("L2-(k,0,0,0)", ("a",)).template("w"))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

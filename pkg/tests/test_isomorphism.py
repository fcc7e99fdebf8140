import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import networks, nx_label_iso, shuffle_internal
from netrecon.fixtures import fig1, fig2_pair, fig3_pair
from netrecon.isomorphism import canonical_network, certificate, is_isomorphic
from netrecon.oracle import EnumSpec, enumerate_networks
from netrecon.templates import theta_network


@pytest.mark.parametrize("seed", range(5))
def test_internal_ids_do_not_matter(seed):
    net = fig1()
    assert is_isomorphic(net, shuffle_internal(net, seed))


def test_figure_pairs_differ():
    for left, right in (fig2_pair(), fig3_pair()):
        assert not is_isomorphic(left, right)
        assert not nx_label_iso(left, right)


def test_leaf_labels_matter():
    a = theta_network(["x"], ["y"], ["w"])
    b = theta_network(["y"], ["w"], ["x"])
    c = theta_network(["x", "y"], ["w"], [])
    assert is_isomorphic(a, b)
    assert not is_isomorphic(a, c)


def test_canonical_network_is_fixed_point():
    net = fig1()
    canon = canonical_network(net)
    assert is_isomorphic(canon, net)
    assert canonical_network(canon).edges == canon.edges


def test_agrees_with_vf2_on_enumeration():
    nets = list(enumerate_networks(EnumSpec(("a", "b", "c"), 12, 2)))
    for n1, n2 in itertools.combinations(nets[:40], 2):
        assert is_isomorphic(n1, n2) == nx_label_iso(n1, n2)


@settings(max_examples=80, deadline=None)
@given(networks(max_leaves=5), st.integers(0, 1000))
def test_certificate_ignores_internal_ids(net, seed):
    assert certificate(shuffle_internal(net, seed)) == certificate(net)


@settings(max_examples=60, deadline=None)
@given(networks(max_leaves=4), networks(max_leaves=4))
def test_matches_vf2(n1, n2):
    assert is_isomorphic(n1, n2) == nx_label_iso(n1, n2)


@settings(max_examples=40, deadline=None)
@given(networks(max_leaves=4), st.integers(0, 50), st.integers(0, 50))
def test_equivalence_relation(net, s1, s2):
    a, b = shuffle_internal(net, s1), shuffle_internal(net, s2)
    assert is_isomorphic(a, a)
    assert is_isomorphic(a, b) and is_isomorphic(b, a)
    assert is_isomorphic(a, net)

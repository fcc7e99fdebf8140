import pytest
from hypothesis import given, settings

from conftest import networks
from netrecon.distances import MultisetMatrix, multiset_matrix, shortest_matrix
from netrecon.errors import BadDegree, ParseError
from netrecon.fixtures import FIXTURE_NAMES, fig1, fixtures
from netrecon.formats import (
    check_label,
    format_matrix,
    format_network,
    parse_matrix,
    parse_network,
    read_network,
    write_network,
)
from netrecon.isomorphism import is_isomorphic
from netrecon.multiset import DistanceMultiset as M
from netrecon.network import Network, singleton


def _all_fixture_networks():
    for name in FIXTURE_NAMES:
        got = fixtures(name)
        yield from got if isinstance(got, tuple) else (got,)


def test_network_round_trip():
    for net in _all_fixture_networks():
        text = format_network(net)
        again = parse_network(text)
        assert is_isomorphic(again, net)
        assert format_network(again) == text


def test_file_round_trip(tmp_path):
    path = tmp_path / "fig1.net"
    write_network(fig1(), path)
    assert path.read_bytes().endswith(b"e\n")
    assert is_isomorphic(read_network(path), fig1())


def test_singleton_network():
    text = format_network(singleton("x"))
    assert text == "leaves: x\n"
    assert parse_network(text).leaves == {"x"}


def test_matrix_round_trip():
    for net in _all_fixture_networks():
        for mat, kind in ((multiset_matrix(net), "multiset"), (shortest_matrix(net), "shortest")):
            assert parse_matrix(format_matrix(mat), kind) == mat


def test_matrix_text():
    text = format_matrix(multiset_matrix(fig1()))
    assert text.splitlines()[0] == "a b : 3,6,6"
    assert text.splitlines()[-1] == "d e : 2"


def test_singleton_matrix_header():
    mm = MultisetMatrix(["x"], {})
    assert format_matrix(mm) == "leaves: x\n"
    assert parse_matrix("leaves: x\n", "multiset") == mm


def test_header_adds_nothing_when_consistent():
    text = "leaves: a,b\na b : 1\n"
    assert parse_matrix(text, "multiset")["a", "b"] == M([1])


@pytest.mark.parametrize(
    "text",
    [
        "",
        "a b 3\n",
        "a a : 0\n",
        "a b : x\n",
        "a b : -1\n",
        "a b : 1\na b : 1\n",
        "a b : 4\na c : 3\n",  # b-c missing
        "_z0 b : 3\n",
    ],
)
def test_bad_matrix(text):
    with pytest.raises(ParseError):
        parse_matrix(text, "multiset")


def test_shortest_cell_needs_one_value():
    with pytest.raises(ParseError):
        parse_matrix("a b : 3,4\n", "shortest")


def test_reserved_prefix():
    with pytest.raises(ParseError):
        check_label("_z0")
    with pytest.raises(ParseError):
        parse_network("leaves: _a,b\n_a b\n")
    check_label("z_0")


@pytest.mark.parametrize("text", ["", "a b\n", "leaves: a,b\na b c\n"])
def test_bad_network(text):
    with pytest.raises(ParseError):
        parse_network(text)


def test_invalid_graph_surfaces_as_network_error():
    with pytest.raises(BadDegree):
        parse_network("leaves: a,b\nq a\nq b\n")


@settings(max_examples=50, deadline=None)
@given(networks())
def test_round_trip_property(net):
    again = parse_network(format_network(net))
    assert is_isomorphic(again, net)
    mm = multiset_matrix(net)
    assert parse_matrix(format_matrix(mm), "multiset") == mm


def test_edge_net_text():
    assert format_network(Network([("x", "y")], "xy")) == "leaves: x,y\nx y\n"

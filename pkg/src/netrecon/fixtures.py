"""Built-in example networks.

The ``fig*`` networks use fixed internal vertex names (``u*``, ``v*``).  The
``cag_*`` fixtures are the four pendant level-2 blob shapes recognised by
the chain-adjacency graph, each hung off a pendant triangle host; ``fig6_*``
are the two ways a pair of chains can be adjacent twice without sitting in
a pendant level-2 blob.
"""

from __future__ import annotations

from .errors import UnknownFixture
from .network import Network, replace_leaf
from .templates import BlobForm, cycle_network, theta_network

FIG1_EDGES = [
    ("v4", "v1"), ("v1", "v6"), ("v6", "v5"), ("v5", "v2"), ("v2", "v4"),
    ("v4", "v0"), ("v0", "v5"),
    ("v0", "c"), ("v1", "a"), ("v6", "b"),
    ("v2", "v3"), ("v3", "d"), ("v3", "e"),
]

# Left blob is a level-2 theta with corners u2, u3; right blob is a triangle.
_FIG2_SKELETON = [
    ("u1", "u2"), ("u2", "u4"), ("u4", "u5"), ("u5", "u3"), ("u3", "u1"), ("u2", "u3"),
    ("u1", "v4"),
    ("v4", "v2"), ("v2", "v3"), ("v3", "v4"),
]

# Left blob is level 3 (hexagon with two chords); right blob is a level-2 theta.
_FIG3_SKELETON = [
    ("u1", "u2"), ("u2", "u4"), ("u4", "u6"), ("u6", "u5"), ("u5", "u3"), ("u3", "u1"),
    ("u2", "u3"), ("u4", "u5"),
    ("u1", "v4"),
    ("v4", "v2"), ("v2", "v1"), ("v1", "v3"), ("v3", "v4"), ("v2", "v3"),
]


def fig1() -> Network:
    return Network(FIG1_EDGES, "abcde")


def fig2_pair() -> tuple[Network, Network]:
    left = Network(_FIG2_SKELETON + [("u4", "a"), ("u5", "b"), ("v2", "c"), ("v3", "d")], "abcd")
    right = Network(_FIG2_SKELETON + [("u4", "c"), ("u5", "d"), ("v2", "a"), ("v3", "b")], "abcd")
    return left, right


def fig3_pair() -> tuple[Network, Network]:
    left = Network(_FIG3_SKELETON + [("u6", "a"), ("v1", "b")], "ab")
    right = Network(_FIG3_SKELETON + [("u6", "b"), ("v1", "a")], "ab")
    return left, right


def _host(form: BlobForm) -> Network:
    """Pendant ``form`` blob joined by its cut-edge to a triangle carrying h1, h2."""
    return replace_leaf(cycle_network(["h1", "h2", "z"]), "z", form.template("z"))


CAG_FORMS = {
    "cag_a": BlobForm("L2-(k,0,m,0)", a=("a",), c=("c",)),
    "cag_b": BlobForm("L2-(k,l,m,0)", a=("a",), b=("b",), c=("c",)),
    "cag_c": BlobForm("L2-(k,0,m,n)", a=("a",), c=("c",), d=("d",)),
    "cag_d": BlobForm("L2-(k,l,m,n)", a=("a",), b=("b",), c=("c",), d=("d",)),
}


def fig6_left() -> Network:
    """Level-1 cycle u p1 p2 v q1 q2 with pendant triangles at u and v."""
    ring = cycle_network(["yz", "a1", "a2", "zz", "b2", "b1"])
    net = replace_leaf(ring, "yz", cycle_network(["y1", "y2", "yz"]))
    return replace_leaf(net, "zz", cycle_network(["z1", "z2", "zz"]))


def fig6_right() -> Network:
    """Level-2 blob with chains on two sides and two pendant triangles on the third."""
    blob = theta_network(["a1", "a2"], ["b1", "b2"], ["yz", "zz"])
    net = replace_leaf(blob, "yz", cycle_network(["y1", "y2", "yz"]))
    return replace_leaf(net, "zz", cycle_network(["z1", "z2", "zz"]))


_SINGLE = {
    "fig1": fig1,
    "fig6_left": fig6_left,
    "fig6_right": fig6_right,
    **{name: (lambda f=form: _host(f)) for name, form in CAG_FORMS.items()},
}
_PAIRS = {"fig2_pair": fig2_pair, "fig3_pair": fig3_pair}
for _stem, _make in _PAIRS.items():
    _fig = _stem.removesuffix("_pair")
    _SINGLE[f"{_fig}_left"] = lambda m=_make: m()[0]
    _SINGLE[f"{_fig}_right"] = lambda m=_make: m()[1]

FIXTURE_NAMES = tuple(sorted(_SINGLE) + sorted(_PAIRS))


def fixtures(name: str):
    """A fixture network, or a ``(left, right)`` pair for the ``*_pair`` names."""
    if name in _SINGLE:
        return _SINGLE[name]()
    if name in _PAIRS:
        return _PAIRS[name]()
    raise UnknownFixture(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}")

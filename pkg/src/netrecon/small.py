"""Level-2 networks on at most three leaves, from shortest distances alone.

With two leaves the network is a row of level-2 blobs, each adding 3 to the
distance.  With three leaves the blob-tree has one branching point; its kind
shows in the pairwise distances modulo 3, and the number of blobs on each
arm follows from the three distances.
"""

from __future__ import annotations

from dataclasses import dataclass

from .distances import ShortestMatrix, shortest_matrix
from .errors import NotRealizableLevel2
from .network import Network, replace_leaf, singleton
from .templates import cycle_network, star, theta_network, two_cut_blob_chain

CENTER_KINDS = ("internal-vertex", "level-1-blob", "level-2-all-different-sides", "level-2-two-same-side")


@dataclass(frozen=True)
class BlobTreeCenter:
    """Branching point of a three-leaf blob-tree.

    ``pair`` is set only for ``level-2-two-same-side``: the two leaves whose
    arms attach to the same side of the blob.
    """

    kind: str
    pair: tuple[str, str] | None = None

    def base_distance(self, x: str, y: str) -> int:
        """Leaf distance through the center when both arms carry no blobs."""
        if self.kind == "internal-vertex":
            return 2
        if self.kind == "level-1-blob":
            return 3
        if self.kind == "level-2-all-different-sides":
            return 4
        return 3 if {x, y} == set(self.pair) else 4

    def network(self, x: str, y: str, z: str) -> Network:
        if self.kind == "internal-vertex":
            return star(x, y, z)
        if self.kind == "level-1-blob":
            return cycle_network([x, y, z])
        if self.kind == "level-2-all-different-sides":
            return theta_network([x], [y], [z])
        p, q = self.pair
        (r,) = {x, y, z} - {p, q}
        return theta_network([p, q], [r], [])


def classify_center(sm: ShortestMatrix) -> BlobTreeCenter:
    x, y, z = sm.labels
    res = {(x, y): sm[x, y] % 3, (x, z): sm[x, z] % 3, (y, z): sm[y, z] % 3}
    vals = sorted(res.values())
    if vals == [2, 2, 2]:
        return BlobTreeCenter("internal-vertex")
    if vals == [0, 0, 0]:
        return BlobTreeCenter("level-1-blob")
    if vals == [1, 1, 1]:
        return BlobTreeCenter("level-2-all-different-sides")
    if vals == [0, 1, 1]:
        (pair,) = [p for p, v in res.items() if v == 0]
        return BlobTreeCenter("level-2-two-same-side", pair)
    raise NotRealizableLevel2(f"distance residues {vals} fit no blob-tree center", stage="small")


def _arm(net: Network, x: str, blobs: int) -> Network:
    """Replace leaf ``x`` by ``blobs`` level-2 blobs in series ending in ``x``."""
    stub = "#arm"
    arm = two_cut_blob_chain(x, stub, blobs)
    return replace_leaf(net.relabel({x: stub}), stub, arm)


def reconstruct_l2_small_shortest(sm: ShortestMatrix) -> Network:
    """The level-2 network on at most three leaves realising ``sm``."""
    n = len(sm)
    if n == 1:
        return singleton(sm.labels[0])
    if n == 2:
        x, y = sm.labels
        d = sm[x, y]
        if d < 1 or d % 3 != 1:
            raise NotRealizableLevel2(f"distance {d} is not 3k+1", stage="small", cell=(x, y))
        return two_cut_blob_chain(x, y, (d - 1) // 3)
    if n != 3:
        raise NotRealizableLevel2(f"{n} leaves: shortest distances only suffice for at most 3", stage="small")
    x, y, z = sm.labels
    center = classify_center(sm)
    s = {}
    for p, q in ((x, y), (x, z), (y, z)):
        extra = sm[p, q] - center.base_distance(p, q)
        if extra < 0 or extra % 3:
            raise NotRealizableLevel2("distance does not fit the center", stage="small", cell=(p, q))
        s[p, q] = extra // 3
    arms = {
        x: s[x, y] + s[x, z] - s[y, z],
        y: s[x, y] + s[y, z] - s[x, z],
        z: s[x, z] + s[y, z] - s[x, y],
    }
    for leaf, twice in arms.items():
        if twice < 0 or twice % 2:
            raise NotRealizableLevel2(f"arm of {leaf!r} has no whole blob count", stage="small")
    net = center.network(x, y, z)
    for leaf, twice in arms.items():
        net = _arm(net, leaf, twice // 2)
    got = shortest_matrix(net)
    bad = got.differing_cells(sm)
    if bad:
        raise NotRealizableLevel2("rebuilt network has different distances", stage="verify", cell=bad[0])
    return net

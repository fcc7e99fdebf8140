"""Small building blocks: cycles, level-2 blobs and pendant-blob forms.

A level-2 blob is a theta graph: two corners ``u`` and ``v`` joined by three
sides.  Builders take each side as the sequence of leaves hung on it, read
from ``u`` to ``v``.  A pendant blob is described by a *template*: the blob
with its leaves plus a stub leaf standing in for the rest of the network.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .network import Network, replace_leaf


def star(x: str, y: str, z: str) -> Network:
    return Network([("#c", x), ("#c", y), ("#c", z)], [x, y, z])


def cycle_network(ring: Sequence[str]) -> Network:
    """A single cycle with one leaf per cycle vertex, in ring order (needs >= 3 leaves)."""
    n = len(ring)
    edges = [(f"#p{i}", f"#p{(i + 1) % n}") for i in range(n)]
    edges += [(f"#p{i}", x) for i, x in enumerate(ring)]
    return Network(edges, ring)


def theta_network(side1: Sequence[str], side2: Sequence[str], side3: Sequence[str]) -> Network:
    """Level-2 blob with the given leaves hung on its three sides, ``u`` to ``v``."""
    edges = []
    leaves = []
    for s, side in enumerate((side1, side2, side3)):
        prev = "#u"
        for i, x in enumerate(side):
            p = f"#s{s}_{i}"
            edges.append((prev, p))
            edges.append((p, x))
            leaves.append(x)
            prev = p
        edges.append((prev, "#v"))
    return Network(edges, leaves)


def two_cut_blob_chain(x: str, y: str, k: int) -> Network:
    """Leaves ``x`` and ``y`` joined through ``k`` level-2 blobs in series."""
    if k == 0:
        return Network([(x, y)], [x, y])
    net = theta_network([x], ["#t"], [])
    for _ in range(k - 1):
        net = replace_leaf(net, "#t", theta_network(["#t"], ["#n"], [])).relabel({"#n": "#t"})
    return net.relabel({"#t": y})


KINDS = (
    "L1-pendant",
    "L2-(k,0,0,0)",
    "L2-(k,l,0,0)",
    "L2-(k,0,m,0)",
    "L2-(k,l,m,0)",
    "L2-(k,0,m,n)",
    "L2-(k,l,m,n)",
)


@dataclass(frozen=True)
class BlobForm:
    """A pendant blob shape with its chains placed in roles ``a, b, c, d``.

    Level-2 layout: ``a`` on side 1 and ``b`` on side 2, both read from
    corner ``u`` to corner ``v``; side 3 carries ``c``, then the attachment
    point of the cut-edge, then ``d``.  So ``c[-1]`` and ``d[0]`` are the
    leaves nearest the cut-edge.  A level-1 pendant blob is the cycle
    through ``a`` and the attachment point.
    """

    kind: str
    a: tuple[str, ...]
    b: tuple[str, ...] = ()
    c: tuple[str, ...] = ()
    d: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown blob form {self.kind!r}")
        k, l, m, n = self.shape
        want = {
            "L1-pendant": k >= 2 and l == m == n == 0,
            "L2-(k,0,0,0)": k >= 1 and l == m == n == 0,
            "L2-(k,l,0,0)": k >= 1 and l >= 1 and m == n == 0,
            "L2-(k,0,m,0)": k >= 1 and l == 0 and m >= 1 and n == 0,
            "L2-(k,l,m,0)": k >= 1 and l >= 1 and m >= 1 and n == 0,
            "L2-(k,0,m,n)": k >= 1 and l == 0 and m >= 1 and n >= 1,
            "L2-(k,l,m,n)": min(k, l, m, n) >= 1,
        }[self.kind]
        if not want:
            raise ValueError(f"chain lengths {self.shape} do not fit {self.kind}")

    @property
    def shape(self) -> tuple[int, int, int, int]:
        return len(self.a), len(self.b), len(self.c), len(self.d)

    @property
    def leaves(self) -> tuple[str, ...]:
        return self.a + self.b + self.c + self.d

    def template(self, z: str) -> Network:
        """The blob with its leaves and a stub leaf ``z`` on the cut-edge."""
        if self.kind == "L1-pendant":
            return cycle_network(self.a + (z,))
        return theta_network(self.a, self.b, self.c + (z,) + self.d)

    def reference_leaf(self) -> str:
        """Leaf whose distances to outside leaves get split by the reduction."""
        if self.kind in ("L1-pendant", "L2-(k,0,0,0)", "L2-(k,l,0,0)"):
            return self.a[0]
        return self.c[-1]

    def offsets(self) -> tuple[int, ...]:
        """Lengths of the paths from the cut-edge's blob end to the reference leaf."""
        k, l, m, n = self.shape
        if self.kind == "L1-pendant":
            return (2, k + 1)
        if self.kind == "L2-(k,0,0,0)":
            return (3, 4, k + 2, k + 3)
        if self.kind == "L2-(k,l,0,0)":
            return (3, l + 4, k + 2, k + l + 3)
        return (2, l + m + n + 3, k + m + n + 3)


def expand_leaf_to_blob(net: Network, z: str, form: BlobForm) -> Network:
    """Replace leaf ``z`` by a pendant blob of shape ``form``."""
    return replace_leaf(net, z, form.template(z))

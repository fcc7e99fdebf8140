"""Reversible reduction steps shared by the reconstruction pipelines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Protocol

from .errors import NoValidReattachment
from .network import Network, attach_leaf, cut_edges, cut_edge_partition, replace_leaf, shortest_paths_from, split_leaf_into_cherry
from .templates import BlobForm


class Step(Protocol):
    def expand(self, net: Network) -> Network: ...


@dataclass(frozen=True)
class CherryStep:
    """Leaves ``x, y`` sharing a neighbour were merged into ``z``."""

    x: str
    y: str
    z: str

    def expand(self, net: Network) -> Network:
        return split_leaf_into_cherry(net, self.z, self.x, self.y)


@dataclass(frozen=True)
class PendantBlobStep:
    """A pendant blob of shape ``form`` was collapsed into leaf ``z``."""

    form: BlobForm
    z: str

    def expand(self, net: Network) -> Network:
        return replace_leaf(net, self.z, self.form.template(self.z))


@dataclass(frozen=True)
class OffBlobLeafStep:
    """Leaf ``x`` hanging off a cut-edge path was removed.

    ``y0`` is a reference leaf and ``dm`` the original shortest distance from
    ``x`` to it; together with the partition they pin down where ``x`` goes
    back.
    """

    x: str
    y: frozenset[str]
    z: frozenset[str]
    y0: str
    dm: int

    def expand(self, net: Network) -> Network:
        want = {self.y, self.z}
        hits = []
        for e in cut_edges(net):
            if set(cut_edge_partition(net, e)) != want:
                continue
            cand = attach_leaf(net, e, self.x)
            if shortest_paths_from(cand, self.x)[self.y0] == self.dm:
                hits.append(cand)
        if len(hits) != 1:
            raise NoValidReattachment(
                f"{len(hits)} cut-edges fit leaf {self.x!r}", stage="off_blob", cell=(self.x, self.y0)
            )
        return hits[0]


@dataclass
class ReductionTrace:
    """Ordered log of reductions; replaying it in reverse rebuilds the network."""

    steps: list = field(default_factory=list)

    def append(self, step) -> None:
        self.steps.append(step)

    def replay(self, base: Network) -> Network:
        net = base
        for step in reversed(self.steps):
            net = step.expand(net)
        return net

    def __len__(self):
        return len(self.steps)


class FreshLabels:
    """Reduction labels ``_z0, _z1, ...`` avoiding a set of taken names."""

    def __init__(self, taken: Iterable[str]):
        self._taken = set(taken)
        self._i = 0

    def __call__(self) -> str:
        while f"_z{self._i}" in self._taken:
            self._i += 1
        name = f"_z{self._i}"
        self._taken.add(name)
        return name

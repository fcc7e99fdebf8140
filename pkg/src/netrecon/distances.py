"""Leaf-to-leaf distance matrices and the matrix-level structure detectors."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Generic, Iterable, Iterator, Mapping, TypeVar, Union

from .errors import InconsistentChains
from .multiset import DistanceMultiset
from .network import Network, iter_simple_path_lengths, shortest_paths_from

T = TypeVar("T")

ZERO = DistanceMultiset([0])


def pair(x: str, y: str) -> tuple[str, str]:
    return (x, y) if x <= y else (y, x)


class LeafMatrix(Generic[T]):
    """Symmetric leaf-indexed matrix storing only the upper triangle."""

    diagonal: T

    __slots__ = ("_labels", "_cells")

    def __init__(self, labels: Iterable[str], cells: Mapping[tuple[str, str], T]):
        self._labels = tuple(sorted(labels))
        self._cells = {}
        for (x, y), value in cells.items():
            if x == y:
                continue
            self._cells[pair(x, y)] = value
        want = len(self._labels) * (len(self._labels) - 1) // 2
        if len(self._cells) != want or any(
            x not in self._labels or y not in self._labels for x, y in self._cells
        ):
            raise ValueError("matrix cells do not cover exactly the label pairs")

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    def __len__(self):
        return len(self._labels)

    def __getitem__(self, key: tuple[str, str]) -> T:
        x, y = key
        if x == y:
            if x not in self._labels:
                raise KeyError(x)
            return self.diagonal
        return self._cells[pair(x, y)]

    def pairs(self) -> Iterator[tuple[tuple[str, str], T]]:
        for key in sorted(self._cells):
            yield key, self._cells[key]

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._labels == other._labels and self._cells == other._cells

    def __hash__(self):
        return hash((self._labels, tuple(self.pairs())))

    def differing_cells(self, other: "LeafMatrix[T]") -> list[tuple[str, str]]:
        if self._labels != other._labels:
            raise ValueError("label sets differ")
        return [k for k in sorted(self._cells) if self._cells[k] != other._cells[k]]

    def restrict(self, keep: Iterable[str]):
        keep = set(keep)
        return type(self)(keep, {k: v for k, v in self._cells.items() if k[0] in keep and k[1] in keep})

    def with_leaf(self, z: str, row: Mapping[str, T], drop: Iterable[str] = ()):
        """Drop leaves ``drop`` and add leaf ``z`` with the given cells."""
        drop = set(drop)
        keep = [x for x in self._labels if x not in drop]
        cells = {k: v for k, v in self._cells.items() if k[0] not in drop and k[1] not in drop}
        for x in keep:
            cells[pair(x, z)] = row[x]
        return type(self)(keep + [z], cells)

    def map_cells(self, fn: Callable[[tuple[str, str], T], T]):
        return type(self)(self._labels, {k: fn(k, v) for k, v in self._cells.items()})

    def __repr__(self):
        return f"{type(self).__name__}({list(self._labels)})"


class ShortestMatrix(LeafMatrix[int]):
    diagonal = 0
    __slots__ = ()


class MultisetMatrix(LeafMatrix[DistanceMultiset]):
    diagonal = ZERO
    __slots__ = ()

    def shortest(self) -> ShortestMatrix:
        return ShortestMatrix(self._labels, {k: v.min() for k, v in self._cells.items()})


AnyMatrix = Union[ShortestMatrix, MultisetMatrix]


def _dm(matrix: AnyMatrix, x: str, y: str) -> int:
    v = matrix[x, y]
    return v if isinstance(v, int) else v.min()


# -- computing matrices from networks -----------------------------------------


def multiset_matrix(net: Network) -> MultisetMatrix:
    """Multiset of lengths of all simple leaf-to-leaf paths, per leaf pair."""
    labels = net.labels
    counts: dict[tuple[str, str], list[int]] = {}
    for i, x in enumerate(labels[:-1]):
        later = set(labels[i + 1:])
        for y, length in iter_simple_path_lengths(net, x):
            if y in later:
                counts.setdefault((x, y), []).append(length)
    cells = {}
    for i, x in enumerate(labels):
        for y in labels[i + 1:]:
            cells[(x, y)] = DistanceMultiset(counts.get((x, y), ()))
    return MultisetMatrix(labels, cells)


def shortest_matrix(net: Network) -> ShortestMatrix:
    """Breadth-first shortest path length per leaf pair."""
    labels = net.labels
    cells = {}
    for i, x in enumerate(labels[:-1]):
        dist = shortest_paths_from(net, x)
        for y in labels[i + 1:]:
            cells[(x, y)] = dist[y]
    return ShortestMatrix(labels, cells)


# -- detectors ----------------------------------------------------------------


def cherries(matrix: AnyMatrix) -> list[tuple[str, str]]:
    """Leaf pairs sharing a neighbour: cell ``{2}`` (or shortest distance 2)."""
    out = []
    for (x, y), v in matrix.pairs():
        if (v == 2) if isinstance(v, int) else (v == DistanceMultiset([2])):
            out.append((x, y))
    return out


@dataclass(frozen=True)
class Chain:
    """Maximal leaf sequence with consecutive shortest distance 3.

    ``cyclic`` marks the single-blob level-1 case where the sequence closes
    up (its two ends are also at distance 3).
    """

    leaves: tuple[str, ...]
    maximal: bool = True
    cyclic: bool = False

    def __len__(self):
        return len(self.leaves)

    @property
    def first(self) -> str:
        return self.leaves[0]

    @property
    def last(self) -> str:
        return self.leaves[-1]

    @property
    def endpoints(self) -> tuple[str, ...]:
        return tuple(dict.fromkeys((self.leaves[0], self.leaves[-1])))

    def reversed(self) -> "Chain":
        return Chain(self.leaves[::-1], self.maximal, self.cyclic)


def chains(matrix: AnyMatrix) -> list[Chain]:
    """Partition the leaves into maximal chains (isolated leaves are length-1 chains).

    Expects a matrix without cherries; raises :class:`InconsistentChains` if
    the distance-3 relation is not a disjoint union of paths and cycles.
    """
    labels = matrix.labels
    partners: dict[str, list[str]] = {x: [] for x in labels}
    for (x, y), _ in matrix.pairs():
        if _dm(matrix, x, y) == 3:
            partners[x].append(y)
            partners[y].append(x)
    for x, ps in partners.items():
        if len(ps) > 2:
            raise InconsistentChains(f"leaf {x!r} is at distance 3 from {sorted(ps)}")
    seen: set[str] = set()
    out = []
    for x in labels:
        if x in seen:
            continue
        comp = _component(x, partners)
        seen.update(comp)
        ends = sorted(v for v in comp if len(partners[v]) < 2)
        if ends:
            order = _walk(ends[0], partners)
            out.append(Chain(tuple(order)))
        else:
            start = min(comp)
            order = _walk(start, partners, toward=min(partners[start]))
            out.append(Chain(tuple(order), cyclic=True))
    out.sort(key=lambda c: c.leaves)
    return out


def _component(x, partners):
    comp = {x}
    stack = [x]
    while stack:
        v = stack.pop()
        for u in partners[v]:
            if u not in comp:
                comp.add(u)
                stack.append(u)
    return comp


def _walk(start, partners, toward=None):
    order = [start]
    prev, cur = None, start
    nxt = toward if toward is not None else (partners[start][0] if partners[start] else None)
    while nxt is not None and nxt != start:
        order.append(nxt)
        prev, cur = cur, nxt
        options = [u for u in partners[cur] if u != prev]
        nxt = options[0] if options else None
    return order


class Adjacency(enum.IntEnum):
    NONE = 0
    ONCE = 1
    TWICE = 2


def adjacency(matrix: AnyMatrix, a: Chain, b: Chain) -> Adjacency:
    """How many times two chains meet through a shared blob corner.

    With a shortest matrix this is the endpoint-distance-4 test.  With a
    multiset matrix each distinct endpoint pair contributes the multiplicity
    of 4 in its cell, which also separates once/twice for length-1 chains
    (where the endpoint test cannot tell the two apart).
    """
    if isinstance(matrix, ShortestMatrix):
        a1, ak, b1, bl = a.first, a.last, b.first, b.last
        if (_dm(matrix, a1, b1) == 4 and _dm(matrix, ak, bl) == 4) or (
            _dm(matrix, a1, bl) == 4 and _dm(matrix, ak, b1) == 4
        ):
            return Adjacency.TWICE
        if any(_dm(matrix, x, y) == 4 for x in a.endpoints for y in b.endpoints):
            return Adjacency.ONCE
        return Adjacency.NONE
    fours = sum(matrix[x, y].count(4) for x in a.endpoints for y in b.endpoints)
    return Adjacency(min(fours, 2))


def endpoint_cells(matrix: MultisetMatrix, a: Chain, b: Chain) -> DistanceMultiset:
    """Sum of the cells over distinct endpoint pairs of two chains."""
    total = DistanceMultiset()
    for x in a.endpoints:
        for y in b.endpoints:
            total = total + matrix[x, y]
    return total

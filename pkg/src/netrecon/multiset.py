"""Finite multisets of path lengths and the arithmetic used by the reductions."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Mapping

from .errors import BadSize, NegativeLength, NotPartitionable


class DistanceMultiset:
    """Immutable multiset of non-negative integers.

    Stored as a sorted tuple with repetition, which makes equality, hashing
    and the text format trivial.
    """

    __slots__ = ("_values",)

    def __init__(self, values: Iterable[int] = ()):
        values = tuple(sorted(values))
        if values and values[0] < 0:
            raise NegativeLength(f"negative length {values[0]}")
        self._values = values

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "DistanceMultiset":
        out = []
        for length, mult in counts.items():
            if mult < 0:
                raise ValueError(f"negative multiplicity for {length}")
            out.extend([length] * mult)
        return cls(out)

    @property
    def values(self) -> tuple[int, ...]:
        return self._values

    @property
    def entries(self) -> dict[int, int]:
        """Map length -> multiplicity."""
        return dict(sorted(Counter(self._values).items()))

    def count(self, length: int) -> int:
        return self._values.count(length)

    def min(self) -> int:
        return self._values[0]

    def __len__(self):
        return len(self._values)

    def __iter__(self):
        return iter(self._values)

    def __eq__(self, other):
        if isinstance(other, DistanceMultiset):
            return self._values == other._values
        return NotImplemented

    def __hash__(self):
        return hash(self._values)

    def __repr__(self):
        inner = ",".join(f"{k}^{v}" for k, v in self.entries.items())
        return "{" + inner + "}"

    def __add__(self, other: "DistanceMultiset") -> "DistanceMultiset":
        return multiset_sum(self, other)

    def __sub__(self, n: int) -> "DistanceMultiset":
        return multiset_shift(self, n)

    def convolve(self, other: "DistanceMultiset") -> "DistanceMultiset":
        """All pairwise sums ``a + b`` (lengths of concatenated path pieces)."""
        return DistanceMultiset(a + b for a in self._values for b in other._values)


def multiset_shift(a: DistanceMultiset, n: int) -> DistanceMultiset:
    """Subtract ``n`` from every entry, keeping multiplicities."""
    if a.values and a.values[0] - n < 0:
        raise NegativeLength(f"{a!r} - {n} has a negative entry")
    return DistanceMultiset(v - n for v in a.values)


def multiset_sum(a: DistanceMultiset, b: DistanceMultiset) -> DistanceMultiset:
    """Multiset union adding multiplicities."""
    return DistanceMultiset(a.values + b.values)


def partition_shifted(m: DistanceMultiset, offsets: Iterable[int]) -> DistanceMultiset:
    """Recover ``S`` from ``M = sum over o in offsets of (S + o)``.

    Greedy: the smallest remaining element must be ``s + min(offsets)`` for
    some ``s`` in ``S``; take it and strike out ``s + o`` for every offset.
    The greedy choice is forced, so the answer is unique when it exists.
    """
    offsets = sorted(offsets)
    if not offsets:
        raise BadSize("empty offset multiset")
    p = len(offsets)
    if len(m) % p:
        raise BadSize(f"|M| = {len(m)} is not divisible by {p}")
    remaining = Counter(m.values)
    lowest = offsets[0]
    base = []
    for e in m.values:
        if not remaining[e]:
            continue
        s = e - lowest
        if s < 0:
            raise NotPartitionable(f"{m!r}: element {e} below smallest offset {lowest}")
        for o in offsets:
            if remaining[s + o] <= 0:
                raise NotPartitionable(f"{m!r}: missing {s + o} for base element {s}")
            remaining[s + o] -= 1
        base.append(s)
    return DistanceMultiset(base)

"""Level-2 reconstruction from multisets of distances.

The reduction loop shrinks the matrix one step at a time:

1. merge a cherry into a single leaf;
2. stop if every leaf hangs on one blob (rebuilt directly);
3. drop a leaf that sits on a cut-edge path between blobs;
4. collapse a pendant blob into a single leaf.  Pendant cycles and the two
   simple level-2 shapes have direct tests; the remaining four level-2
   shapes are read off the chain-adjacency graph.

Every pendant-blob candidate is glued back onto the reduced matrix and
compared against all affected cells before it is accepted, which also
settles chain orientations the detection tests leave open.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import networkx as nx

from .distances import (
    Adjacency,
    Chain,
    MultisetMatrix,
    ShortestMatrix,
    adjacency,
    chains,
    cherries,
    endpoint_cells,
    multiset_matrix,
    shortest_matrix,
)
from .errors import (
    AmbiguousArrangement,
    InconsistentChains,
    MultisetError,
    NetworkError,
    NotACherry,
    NotRealizable,
    NotRealizableLevel2,
)
from .isomorphism import certificate
from .multiset import DistanceMultiset, partition_shifted
from .network import Network, singleton
from .templates import BlobForm, cycle_network, theta_network, two_cut_blob_chain
from .trace import CherryStep, FreshLabels, OffBlobLeafStep, PendantBlobStep, ReductionTrace

CHERRY = DistanceMultiset([2])


# -- cherries -------------------------------------------------------------------


def reduce_cherry(mm: MultisetMatrix, x: str, y: str, z: str | None = None):
    """Replace cherry ``x, y`` by leaf ``z``: ``d(a, z) = d(a, x) - 1``."""
    if mm[x, y] != CHERRY:
        raise NotACherry(f"d({x},{y}) = {mm[x, y]!r} is not {{2}}", stage="cherry", cell=(x, y))
    if z is None:
        z = FreshLabels(mm.labels)()
    row = {a: mm[x, a] - 1 for a in mm.labels if a not in (x, y)}
    return mm.with_leaf(z, row, drop=(x, y)), CherryStep(x, y, z)


# -- leaves outside blobs -------------------------------------------------------


@dataclass(frozen=True)
class PartitionWitness:
    """Leaf ``x`` lies on every shortest path between ``y`` and ``z`` sides."""

    x: str
    y: frozenset[str]
    z: frozenset[str]


def _witness_for(sm: ShortestMatrix, x: str) -> PartitionWitness | None:
    others = [y for y in sm.labels if y != x]
    fails = nx.Graph()
    fails.add_nodes_from(others)
    for y, z in itertools.combinations(others, 2):
        if sm[y, z] != sm[x, y] + sm[x, z] - 2:
            fails.add_edge(y, z)
    parts = sorted((frozenset(c) for c in nx.connected_components(fails)), key=min)
    if len(parts) != 2:
        return None
    return PartitionWitness(x, parts[0], parts[1])


def detect_off_blob_leaf(mm: MultisetMatrix) -> PartitionWitness | None:
    """Witness for the first leaf not contained in a blob, if any."""
    if len(mm) < 3:
        return None
    sm = mm.shortest()
    for x in sm.labels:
        w = _witness_for(sm, x)
        if w is not None:
            return w
    return None


def remove_off_blob_leaf(mm: MultisetMatrix, witness: PartitionWitness):
    """Delete the witness leaf; distances across the partition shrink by one."""
    x, ys, zs = witness.x, witness.y, witness.z
    keep = ys | zs
    if x in keep or ys & zs or keep != set(mm.labels) - {x} or not ys or not zs:
        raise NotRealizableLevel2("witness is not a partition of the other leaves", stage="off_blob")
    cells = {}
    for u, v in itertools.combinations(sorted(keep), 2):
        cell = mm[u, v]
        cells[(u, v)] = cell - 1 if (u in ys) != (v in ys) else cell
    y0 = min(keep)
    step = OffBlobLeafStep(x, frozenset(ys), frozenset(zs), y0, mm[x, y0].min())
    return MultisetMatrix(keep, cells), step


def reattach(net: Network, step: OffBlobLeafStep) -> Network:
    return step.expand(net)


# -- pendant blobs: direct tests ------------------------------------------------


def _outside(labels: Iterable[str], inside: Iterable[str]) -> list[str]:
    inside = set(inside)
    return [x for x in labels if x not in inside]


def _far_from_rest(sm: ShortestMatrix, members: Iterable[str], outside: list[str]) -> bool:
    """Both distance thresholds separating a pendant level-2 blob from a level-1 lookalike."""
    if not outside:
        return False
    for c in members:
        if any(sm[c, x] < 6 for x in outside):
            return False
        for y, z in itertools.combinations(outside, 2):
            if sm[c, y] + sm[c, z] - sm[y, z] < 8:
                return False
    return True


def _pendant_l1_chains(mm: MultisetMatrix, found: list[Chain]) -> list[Chain]:
    out = []
    for ch in found:
        k = len(ch)
        if k >= 2 and not ch.cyclic and k < len(mm):
            if mm[ch.first, ch.last] == DistanceMultiset([4, k + 1]):
                out.append(ch)
    return out


def _pendant_k000_chains(mm: MultisetMatrix, found: list[Chain]) -> list[Chain]:
    sm = mm.shortest()
    out = []
    for ch in found:
        k = len(ch)
        if ch.cyclic or k == len(mm):
            continue
        if k >= 2:
            if mm[ch.first, ch.last] == DistanceMultiset([5, 6, k + 1]):
                out.append(ch)
        elif _far_from_rest(sm, ch.leaves, _outside(sm.labels, ch.leaves)):
            out.append(ch)
    return out


def _pendant_kl00_pairs(mm: MultisetMatrix, found: list[Chain]) -> list[tuple[Chain, Chain]]:
    sm = mm.shortest()
    out = []
    for a, b in itertools.combinations(found, 2):
        if a.cyclic or b.cyclic or adjacency(mm, a, b) != Adjacency.TWICE:
            continue
        members = a.leaves + b.leaves
        if _far_from_rest(sm, members, _outside(sm.labels, members)):
            out.append((a, b))
    return out


def detect_pendant_l1_chain(mm: MultisetMatrix, found: list[Chain]) -> tuple[Chain, int] | None:
    """Chain ``(a_1..a_k)`` on a pendant cycle: ``d(a_1, a_k) = {4, k+1}``."""
    hits = _pendant_l1_chains(mm, found)
    return (hits[0], len(hits[0])) if hits else None


def detect_pendant_l2_k000(mm: MultisetMatrix, found: list[Chain]) -> tuple[Chain, int] | None:
    """Chain alone on a pendant level-2 blob whose other sides are bare."""
    hits = _pendant_k000_chains(mm, found)
    return (hits[0], len(hits[0])) if hits else None


def detect_pendant_l2_kl00(mm: MultisetMatrix, found: list[Chain]) -> tuple[Chain, Chain] | None:
    """Two chains filling the two cut-edge-free sides of a pendant level-2 blob."""
    hits = _pendant_kl00_pairs(mm, found)
    return hits[0] if hits else None


# -- chain-adjacency graph ------------------------------------------------------


def green_count(mm: MultisetMatrix, a: Chain, b: Chain) -> int:
    """Length-5 endpoint paths avoiding both chains, for chains adjacent once.

    Every length-5 path between endpoints counts, less one for each chain
    of length exactly two (its single inner edge carries one such path).
    """
    fives = endpoint_cells(mm, a, b).count(5)
    return fives - (len(a) == 2) - (len(b) == 2)


@dataclass(frozen=True)
class CAG:
    chains: tuple[Chain, ...]
    red: dict[tuple[int, int], int] = field(default_factory=dict)
    green: dict[tuple[int, int], int] = field(default_factory=dict)

    def edges(self, i: int, j: int) -> tuple[int, int]:
        key = (min(i, j), max(i, j))
        return self.red.get(key, 0), self.green.get(key, 0)

    def components(self) -> list[list[int]]:
        g = nx.Graph()
        g.add_nodes_from(range(len(self.chains)))
        g.add_edges_from(self.red)
        return sorted((sorted(c) for c in nx.connected_components(g)), key=lambda c: c[0])


def build_cag(mm: MultisetMatrix, found: list[Chain]) -> CAG:
    red, green = {}, {}
    found = tuple(found)
    for i, j in itertools.combinations(range(len(found)), 2):
        adj = adjacency(mm, found[i], found[j])
        if adj == Adjacency.NONE:
            continue
        red[(i, j)] = int(adj)
        if adj == Adjacency.ONCE:
            g = green_count(mm, found[i], found[j])
            if g > 0:
                green[(i, j)] = g
    return CAG(found, red, green)


@dataclass(frozen=True)
class CagMatch:
    """A CAG component matching one pendant level-2 shape.

    ``pair`` holds the two chains adjacent twice (roles ``a, b``) when the
    shape has them; ``rest`` holds the remaining chains.
    """

    kind: str
    pair: tuple[Chain, ...]
    rest: tuple[Chain, ...]

    def arrangements(self) -> Iterator[BlobForm]:
        """Every placement of the chains into roles and orientations."""
        if self.kind == "L2-(k,0,m,0)":
            for a, c in itertools.permutations(self.rest):
                for oa, oc in itertools.product(_orient(a), _orient(c)):
                    yield BlobForm(self.kind, a=oa, c=oc)
        elif self.kind == "L2-(k,l,m,0)":
            a, b = self.pair
            (c,) = self.rest
            for oa, ob, oc in itertools.product(_orient(a), _orient(b), _orient(c)):
                yield BlobForm(self.kind, a=oa, b=ob, c=oc)
        elif self.kind == "L2-(k,0,m,n)":
            for a, c, d in itertools.permutations(self.rest):
                for oa, oc, od in itertools.product(_orient(a), _orient(c), _orient(d)):
                    yield BlobForm(self.kind, a=oa, c=oc, d=od)
        else:
            a, b = self.pair
            for c, d in itertools.permutations(self.rest):
                for oa, ob, oc, od in itertools.product(_orient(a), _orient(b), _orient(c), _orient(d)):
                    yield BlobForm(self.kind, a=oa, b=ob, c=oc, d=od)


def _orient(ch: Chain) -> list[tuple[str, ...]]:
    return [ch.leaves] if len(ch) == 1 else [ch.leaves, ch.leaves[::-1]]


def match_cag_patterns(cag: CAG) -> list[CagMatch]:
    """Components of the CAG shaped like one of the four pendant level-2 blobs."""
    out = []
    for comp in cag.components():
        chs = [cag.chains[i] for i in comp]
        if any(ch.cyclic for ch in chs):
            continue
        pairs = {(i, j): cag.edges(i, j) for i, j in itertools.combinations(comp, 2)}
        shape = sorted(pairs.values())
        if len(comp) == 2 and shape == [(1, 2)]:
            out.append(CagMatch("L2-(k,0,m,0)", (), tuple(chs)))
        elif len(comp) == 3 and shape == [(1, 1), (1, 1), (2, 0)]:
            (i, j), = [p for p, v in pairs.items() if v == (2, 0)]
            (r,) = [t for t in comp if t not in (i, j)]
            out.append(CagMatch("L2-(k,l,m,0)", (cag.chains[i], cag.chains[j]), (cag.chains[r],)))
        elif len(comp) == 3 and shape == [(1, 1)] * 3:
            out.append(CagMatch("L2-(k,0,m,n)", (), tuple(chs)))
        elif len(comp) == 4 and shape == [(1, 0)] * 5 + [(2, 0)]:
            (i, j), = [p for p, v in pairs.items() if v == (2, 0)]
            rest = tuple(cag.chains[t] for t in comp if t not in (i, j))
            out.append(CagMatch("L2-(k,l,m,n)", (cag.chains[i], cag.chains[j]), rest))
    return out


# -- collapsing a pendant blob --------------------------------------------------


def _glue_check(mm: MultisetMatrix, form: BlobForm, z: str, strict: bool) -> MultisetMatrix | None:
    """Reduced matrix if ``mm`` is consistent with ``form`` hanging off the rest.

    With ``strict`` the first inconsistency raises instead of returning ``None``.
    """

    def fail(msg, cell=None, exc=None):
        if strict:
            raise NotRealizableLevel2(msg, stage="pendant_l2" if form.kind != "L1-pendant" else "pendant_l1", cell=cell) from exc
        return None

    inside = form.leaves
    outside = _outside(mm.labels, inside)
    if not outside or any(y not in mm.labels for y in inside):
        return fail("blob leaves do not fit the matrix")
    tm = multiset_matrix(form.template(z))
    for y1, y2 in itertools.combinations(inside, 2):
        if mm[y1, y2] != tm[y1, y2]:
            return fail("blob cell disagrees with the blob shape", (y1, y2))
    ref = form.reference_leaf()
    offsets = form.offsets()
    legs = {y: tm[z, y] for y in inside}
    row = {}
    for x in outside:
        if strict:
            base = partition_shifted(mm[x, ref], offsets)
        else:
            try:
                base = partition_shifted(mm[x, ref], offsets)
            except MultisetError:
                return None
        for y in inside:
            if base.convolve(legs[y]) - 1 != mm[x, y]:
                return fail("cell disagrees with the blob shape", (x, y))
        row[x] = base
    return mm.with_leaf(z, row, drop=inside)


def reduce_blob(mm: MultisetMatrix, form: BlobForm, z: str):
    """Collapse the pendant blob described by ``form`` into leaf ``z``."""
    reduced = _glue_check(mm, form, z, strict=True)
    return reduced, PendantBlobStep(form, z)


def reduce_pendant_l1(mm: MultisetMatrix, chain: Chain, z: str):
    return reduce_blob(mm, BlobForm("L1-pendant", chain.leaves), z)


def _pick(mm: MultisetMatrix, forms: Iterable[BlobForm], z: str, stage: str):
    """The unique consistent arrangement among ``forms``, or ``None``."""
    survivors = {}
    for form in forms:
        reduced = _glue_check(mm, form, z, strict=False)
        if reduced is not None:
            survivors.setdefault(certificate(form.template(z)), (reduced, form))
    if len(survivors) > 1:
        raise AmbiguousArrangement(f"{len(survivors)} blob arrangements fit", stage=stage)
    if survivors:
        reduced, form = next(iter(survivors.values()))
        return reduced, PendantBlobStep(form, z)
    return None


def orient_and_reduce_pendant_l2(mm: MultisetMatrix, match: CagMatch, z: str):
    """Place the matched chains on the blob and collapse it into ``z``."""
    got = _pick(mm, match.arrangements(), z, "cag")
    if got is None:
        raise AmbiguousArrangement("no arrangement of the matched chains fits", stage="cag")
    return got


def _pendant_groups(mm: MultisetMatrix, found: list[Chain]) -> Iterator[tuple[str, list[BlobForm]]]:
    """Candidate pendant blobs in detection order, each with its arrangements."""
    for ch in _pendant_l1_chains(mm, found):
        yield "pendant_l1", [BlobForm("L1-pendant", ch.leaves)]
    for ch in _pendant_k000_chains(mm, found):
        yield "pendant_k000", [BlobForm("L2-(k,0,0,0)", ch.leaves)]
    for a, b in _pendant_kl00_pairs(mm, found):
        yield "pendant_kl00", [BlobForm("L2-(k,l,0,0)", a.leaves, ob) for ob in _orient(b)]
    for match in match_cag_patterns(build_cag(mm, found)):
        yield "cag", list(match.arrangements())


# -- base cases -----------------------------------------------------------------


def _matrix_of(net: Network, like):
    return shortest_matrix(net) if isinstance(like, ShortestMatrix) else multiset_matrix(net)


def single_blob_l2(matrix) -> Network | None:
    """The network if every leaf hangs directly on a single blob, else ``None``.

    Candidates place the chains on the sides of one cycle or one level-2
    blob in every orientation; exactly one must reproduce ``matrix``.
    """
    try:
        found = chains(matrix)
    except InconsistentChains:
        return None
    cands = []
    if len(found) == 1 and found[0].cyclic and len(found[0]) >= 3:
        cands.append(cycle_network(found[0].leaves))
    elif 2 <= len(found) <= 3 and not any(ch.cyclic for ch in found):
        if any(adjacency(matrix, a, b) != Adjacency.TWICE for a, b in itertools.combinations(found, 2)):
            return None
        first, rest = found[0], found[1:]
        for sides in itertools.product(*(_orient(ch) for ch in rest)):
            third = sides[1] if len(sides) > 1 else ()
            cands.append(theta_network(first.leaves, sides[0], third))
    else:
        return None
    hits = {}
    for net in cands:
        if _matrix_of(net, matrix) == matrix:
            hits.setdefault(certificate(net), net)
    if len(hits) > 1:
        raise AmbiguousArrangement(f"{len(hits)} single-blob placements fit", stage="single_blob")
    return next(iter(hits.values()), None)


def _two_leaf_base(mm: MultisetMatrix) -> Network:
    x, y = mm.labels
    dm = mm[x, y].min()
    if dm % 3 != 1:
        raise NotRealizableLevel2(f"two leaves at distance {dm}", stage="base", cell=(x, y))
    net = two_cut_blob_chain(x, y, (dm - 1) // 3)
    if multiset_matrix(net) != mm:
        raise NotRealizableLevel2("two-leaf cell does not match blobs in series", stage="base", cell=(x, y))
    return net


# -- the pipeline ---------------------------------------------------------------


def reduce_l2(mm: MultisetMatrix) -> tuple[Network, ReductionTrace]:
    """Reduce ``mm`` to a base network; returns it with the reduction log."""
    fresh = FreshLabels(mm.labels)
    trace = ReductionTrace()
    while True:
        if len(mm) == 1:
            return singleton(mm.labels[0]), trace
        if len(mm) == 2:
            return _two_leaf_base(mm), trace
        found = cherries(mm)
        if found:
            mm, step = reduce_cherry(mm, *found[0], z=fresh())
            trace.append(step)
            continue
        base = single_blob_l2(mm)
        if base is not None:
            return base, trace
        witness = detect_off_blob_leaf(mm)
        if witness is not None:
            mm, step = remove_off_blob_leaf(mm, witness)
            trace.append(step)
            continue
        chs = chains(mm)
        z = fresh()
        for stage, forms in _pendant_groups(mm, chs):
            got = _pick(mm, forms, z, stage)
            if got is not None:
                mm, step = got
                trace.append(step)
                break
        else:
            raise NotRealizableLevel2("no cherry, off-blob leaf or pendant blob found", stage="detect")


def reconstruct_l2(mm: MultisetMatrix) -> Network:
    """The level-2 network realising ``mm``; raises :class:`NotRealizableLevel2` otherwise."""
    try:
        base, trace = reduce_l2(mm)
        net = trace.replay(base)
    except NotRealizableLevel2:
        raise
    except (NotRealizable, NetworkError, MultisetError, ValueError) as exc:
        raise NotRealizableLevel2(str(exc), stage=getattr(exc, "stage", None) or "reduce") from exc
    bad = multiset_matrix(net).differing_cells(mm)
    if bad:
        raise NotRealizableLevel2("rebuilt network has different multisets", stage="verify", cell=bad[0])
    return net

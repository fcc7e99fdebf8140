"""Level-1 reconstruction from shortest distances.

Repeatedly merge cherries and collapse pendant cycles into single leaves
until one cycle (or one edge) is left, then replay the log backwards.
"""

from __future__ import annotations

from .distances import Chain, ShortestMatrix, chains, cherries, shortest_matrix
from .errors import InconsistentChains, MultisetError, NetworkError, NoPendantChain, NotRealizable, NotRealizableLevel1
from .network import Network, singleton
from .templates import BlobForm, cycle_network
from .trace import CherryStep, FreshLabels, PendantBlobStep, ReductionTrace


def reduce_cherry_shortest(sm: ShortestMatrix, x: str, y: str, z: str) -> ShortestMatrix:
    """Merge cherry ``x, y`` into ``z`` with ``d(z, a) = d(x, a) - 1``."""
    row = {a: sm[x, a] - 1 for a in sm.labels if a not in (x, y)}
    return sm.with_leaf(z, row, drop=(x, y))


def detect_single_blob_l1(sm: ShortestMatrix) -> tuple[str, ...] | None:
    """Cyclic leaf order if all leaves hang on one cycle, else ``None``."""
    try:
        found = chains(sm)
    except InconsistentChains:
        return None
    if len(found) == 1 and found[0].cyclic and len(found[0]) >= 3:
        return found[0].leaves
    return None


def find_pendant_chain(sm: ShortestMatrix, found: list[Chain]) -> Chain:
    """First chain of length >= 2 whose two ends see every other leaf equally far."""
    for ch in found:
        if len(ch) < 2 or ch.cyclic or len(ch) == len(sm):
            continue
        a1, ak = ch.first, ch.last
        inside = set(ch.leaves)
        if all(sm[a1, x] == sm[ak, x] for x in sm.labels if x not in inside):
            return ch
    raise NoPendantChain("no chain sits in a pendant cycle", stage="pendant_l1")


def reduce_pendant_chain_shortest(sm: ShortestMatrix, ch: Chain, z: str) -> ShortestMatrix:
    inside = set(ch.leaves)
    row = {x: sm[x, ch.first] - 2 for x in sm.labels if x not in inside}
    return sm.with_leaf(z, row, drop=inside)


def _base_l1(sm: ShortestMatrix) -> Network:
    if len(sm) == 1:
        return singleton(sm.labels[0])
    if len(sm) == 2:
        x, y = sm.labels
        if sm[x, y] != 1:
            raise NotRealizableLevel1(f"two leaves at distance {sm[x, y]}", stage="base", cell=(x, y))
        return Network([(x, y)], [x, y])
    order = detect_single_blob_l1(sm)
    if order is None:
        raise NoPendantChain("no cherry, single cycle or pendant chain", stage="pendant_l1")
    return cycle_network(order)


def reduce_l1(sm: ShortestMatrix) -> tuple[ShortestMatrix, ReductionTrace]:
    """Reduce to a base matrix (one or two leaves, or one cycle)."""
    fresh = FreshLabels(sm.labels)
    trace = ReductionTrace()
    while len(sm) > 2:
        found = cherries(sm)
        if found:
            x, y = found[0]
            z = fresh()
            sm = reduce_cherry_shortest(sm, x, y, z)
            trace.append(CherryStep(x, y, z))
            continue
        if detect_single_blob_l1(sm) is not None:
            break
        ch = find_pendant_chain(sm, chains(sm))
        z = fresh()
        sm = reduce_pendant_chain_shortest(sm, ch, z)
        trace.append(PendantBlobStep(BlobForm("L1-pendant", ch.leaves), z))
    return sm, trace


def reconstruct_l1(sm: ShortestMatrix) -> Network:
    """The level-1 network realising ``sm``; raises :class:`NotRealizableLevel1` otherwise."""
    try:
        base, trace = reduce_l1(sm)
        net = trace.replay(_base_l1(base))
    except NotRealizableLevel1:
        raise
    except (NotRealizable, NetworkError, MultisetError, ValueError) as exc:
        raise NotRealizableLevel1(str(exc), stage=getattr(exc, "stage", None) or "reduce") from exc
    got = shortest_matrix(net)
    bad = got.differing_cells(sm)
    if bad:
        raise NotRealizableLevel1("rebuilt network has different distances", stage="verify", cell=bad[0])
    return net

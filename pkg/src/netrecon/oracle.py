"""Brute-force enumeration of small networks and matrix collision scans.

Networks on a leaf set are grown from smaller ones by three moves:

* hang a new leaf on an edge;
* subdivide two distinct edges and join the new vertices;
* replace an edge by a level-2 blob with two cut-edges;
* hang a leafless level-3 blob off an edge.

Undoing the first three covers every network of level at most 2: a tree
loses a leaf, a blob edge can be deleted unless the blob is the
two-cut-edge level-2 blob, and that blob can be removed whole.  The fourth
move patches the one gap found at level 3 by the brute-force cross-check;
level-3 completeness is only checked, not argued.  None of the moves lowers
the level or the edge count, so both budgets prune safely.  Results are
deduplicated by canonical certificate.
"""

from __future__ import annotations

import itertools
import os
import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .distances import multiset_matrix, shortest_matrix
from .errors import BudgetExceeded, NetworkError
from .fixtures import FIXTURE_NAMES, fixtures
from .formats import format_matrix, format_network
from .isomorphism import certificate, is_isomorphic
from .network import Network, _IdSource, add_bridge, attach_leaf, network_level, singleton

__all__ = [
    "EnumSpec",
    "CollisionReport",
    "enumerate_networks",
    "naive_networks",
    "collision_scan",
    "random_level2_networks",
    "insert_blob",
    "hang_k4",
    "fixtures",
    "FIXTURE_NAMES",
]

EDGE_CAP = int(os.environ.get("NETRECON_EDGE_CAP", "20"))
STORE_CAP = 500_000


@dataclass(frozen=True)
class EnumSpec:
    labels: tuple[str, ...]
    max_edges: int
    max_level: int
    cap: int = STORE_CAP

    def __post_init__(self):
        labels = tuple(sorted(set(self.labels)))
        if len(labels) != len(self.labels) or not labels:
            raise ValueError("labels must be non-empty and distinct")
        object.__setattr__(self, "labels", labels)
        if self.max_edges > EDGE_CAP:
            raise ValueError(f"max_edges {self.max_edges} exceeds the cap {EDGE_CAP} (set NETRECON_EDGE_CAP)")
        if self.max_edges < 0 or self.max_level < 0:
            raise ValueError("budgets must be non-negative")


def _edge_count(n: int, r: int) -> int:
    return 0 if n == 1 else 2 * n - 3 + 3 * r


def insert_blob(net: Network, e: tuple[str, str]) -> Network:
    """Replace edge ``e`` by a level-2 blob whose two cut-edges lead to ``e``'s ends."""
    u, v = e
    if not net.has_edge(u, v):
        raise NetworkError(f"{e!r} is not an edge")
    adj = net.adjacency()
    fresh = _IdSource(adj)
    p, q, a, b = fresh(), fresh(), fresh(), fresh()
    adj[u].discard(v)
    adj[v].discard(u)
    adj[u].add(p)
    adj[v].add(q)
    adj[p] = {u, a, b}
    adj[q] = {v, a, b}
    adj[a] = {p, q, b}
    adj[b] = {p, q, a}
    return Network._from_adj(adj, net.leaves)


def hang_k4(net: Network, e: tuple[str, str]) -> Network:
    """Hang a leafless level-3 blob (K4 with one edge subdivided) off edge ``e``."""
    u, v = e
    if not net.has_edge(u, v):
        raise NetworkError(f"{e!r} is not an edge")
    adj = net.adjacency()
    fresh = _IdSource(adj)
    p, s, k1, k2, k3, k4 = (fresh() for _ in range(6))
    adj[u].discard(v)
    adj[v].discard(u)
    adj[u].add(p)
    adj[v].add(p)
    adj[p] = {u, v, s}
    adj[s] = {p, k1, k2}
    adj[k1] = {s, k3, k4}
    adj[k2] = {s, k3, k4}
    adj[k3] = {k1, k2, k4}
    adj[k4] = {k1, k2, k3}
    return Network._from_adj(adj, net.leaves)


class _Store:
    def __init__(self, cap: int):
        self.cap = cap
        self.items: dict[tuple, Network] = {}

    def add(self, net: Network, max_level: int) -> None:
        if network_level(net) > max_level:
            return
        cert = certificate(net)
        if cert not in self.items:
            if len(self.items) >= self.cap:
                raise BudgetExceeded(f"more than {self.cap} networks in one layer")
            self.items[cert] = net


def _grow(n: int, r: int, max_edges: int, max_level: int, cap: int, memo: dict) -> list[Network]:
    """All networks on leaves ``L0..L{n-1}`` with cyclomatic number ``r``."""
    key = (n, r)
    if key in memo:
        return memo[key]
    labels = [f"L{i}" for i in range(n)]
    out: list[Network] = []
    if n == 1:
        out = [singleton("L0")] if r == 0 else []
    elif r < 0 or _edge_count(n, r) > max_edges:
        out = []
    elif n == 2 and r == 0:
        out = [Network([("L0", "L1")], labels)]
    else:
        store = _Store(cap)
        for base in _grow(n - 1, r, max_edges, max_level, cap, memo):
            for i, x in enumerate(labels):
                rest = labels[:i] + labels[i + 1:]
                moved = base.relabel(dict(zip(labels[:-1], rest)))
                if moved.num_edges == 0:
                    store.add(attach_leaf(moved, None, x), max_level)
                    continue
                for e in moved.edges:
                    store.add(attach_leaf(moved, e, x), max_level)
        for base in _grow(n, r - 1, max_edges, max_level, cap, memo):
            for e1, e2 in itertools.combinations(base.edges, 2):
                store.add(add_bridge(base, e1, e2), max_level)
        if max_level >= 2:
            for base in _grow(n, r - 2, max_edges, max_level, cap, memo):
                for e in base.edges:
                    store.add(insert_blob(base, e), max_level)
        if max_level >= 3:
            for base in _grow(n, r - 3, max_edges, max_level, cap, memo):
                for e in base.edges:
                    store.add(hang_k4(base, e), max_level)
        out = [store.items[c] for c in sorted(store.items)]
    memo[key] = out
    return out


def enumerate_networks(spec: EnumSpec) -> Iterator[Network]:
    """Every network on ``spec.labels`` within the budgets, once per isomorphism class.

    Output order is fixed: by edge count, then canonical serialization.
    """
    n = len(spec.labels)
    memo: dict = {}
    found = []
    r = 0
    while _edge_count(n, r) <= spec.max_edges:
        found.extend(_grow(n, r, spec.max_edges, spec.max_level, spec.cap, memo))
        if n == 1:
            break
        r += 1
    rename = {f"L{i}": x for i, x in enumerate(spec.labels)}
    nets = [net.relabel(rename) for net in found]
    keyed = sorted((net.num_edges, format_network(net), i) for i, net in enumerate(nets))
    for _, _, i in keyed:
        yield nets[i]


# -- naive cross-check ----------------------------------------------------------


def naive_networks(labels: Sequence[str], max_edges: int, max_level: int) -> list[Network]:
    """Same class as :func:`enumerate_networks`, by filtering all degree-feasible graphs.

    Slow; meant only as an independent check at small sizes.
    """
    labels = sorted(labels)
    n = len(labels)
    if n == 1:
        return [singleton(labels[0])]
    found: dict[tuple, Network] = {}
    r = 0
    while _edge_count(n, r) <= max_edges:
        m = n - 2 + 2 * r
        if n == 2 and r == 0:
            net = Network([tuple(labels)], labels)
            found[certificate(net)] = net
        else:
            for net in _all_graphs(labels, m):
                if network_level(net) <= max_level:
                    found.setdefault(certificate(net), net)
        r += 1
    return sorted(found.values(), key=lambda net: (net.num_edges, format_network(net)))


def _all_graphs(labels: list[str], m: int) -> Iterator[Network]:
    internal = [f"#{i}" for i in range(m)]
    need = {x: 1 for x in labels} | {v: 3 for v in internal}
    adj: dict[str, set[str]] = {v: set() for v in need}
    order = list(labels) + internal
    used = set(labels)

    def fill(pos: int) -> Iterator[Network]:
        while pos < len(order) and len(adj[order[pos]]) == need[order[pos]]:
            pos += 1
        if pos == len(order):
            try:
                yield Network._from_adj(adj, labels)
            except NetworkError:
                pass
            return
        v = order[pos]
        if v not in used:
            return  # an internal vertex nobody reached: disconnected
        fresh = next((w for w in internal if w not in used), None)
        targets = [w for w in internal if w in used] + ([fresh] if fresh else [])
        for w in targets:
            if w == v or w in adj[v] or len(adj[w]) >= need[w]:
                continue
            if order.index(w) < pos:
                continue
            newly = w not in used
            adj[v].add(w)
            adj[w].add(v)
            used.add(w)
            yield from fill(pos)
            adj[v].discard(w)
            adj[w].discard(v)
            if newly:
                used.discard(w)

    yield from fill(0)


# -- random growth --------------------------------------------------------------


def random_level2_networks(count: int, max_edges: int = 30, seed: int = 0) -> list[Network]:
    """``count`` distinct random level-2 networks (at least one level-2 blob each)."""
    rng = random.Random(seed)
    seen: dict[tuple, Network] = {}
    while len(seen) < count:
        net = _random_level2(rng, max_edges)
        if net is not None:
            seen.setdefault(certificate(net), net)
    return list(seen.values())


def _random_level2(rng: random.Random, max_edges: int) -> Network | None:
    n = rng.randint(2, 9)
    labels = [f"t{i}" for i in range(n)]
    net = Network([(labels[0], labels[1])], labels[:2])
    for x in labels[2:]:
        net = attach_leaf(net, rng.choice(net.edges), x)
    target = rng.randint(max(net.num_edges, max_edges - 12), max_edges)
    for _ in range(60):
        room = target - net.num_edges
        if room < 3:
            break
        if room >= 6 and rng.random() < 0.25:
            cand = insert_blob(net, rng.choice(net.edges))
        elif net.num_edges >= 2:
            e1, e2 = rng.sample(net.edges, 2)
            cand = add_bridge(net, e1, e2)
        else:
            continue
        if network_level(cand) <= 2:
            net = cand
    if network_level(net) != 2:
        return None
    return net


# -- collisions -----------------------------------------------------------------


@dataclass
class CollisionReport:
    """Groups of pairwise non-isomorphic networks sharing one matrix."""

    kind: str
    groups: list[list[Network]] = field(default_factory=list)

    @property
    def pairs(self) -> list[tuple[Network, Network]]:
        return [p for g in self.groups for p in itertools.combinations(g, 2)]

    def __len__(self):
        return len(self.pairs)

    def format(self) -> str:
        out = [f"kind: {self.kind}", f"groups: {len(self.groups)}", f"pairs: {len(self.pairs)}"]
        for i, g in enumerate(self.groups):
            mat = multiset_matrix(g[0]) if self.kind == "multiset" else shortest_matrix(g[0])
            out.append(f"-- group {i}: {len(g)} networks")
            out.append(format_matrix(mat).rstrip("\n"))
            for j, net in enumerate(g):
                out.append(f"-- group {i} network {j}")
                out.append(format_network(net).rstrip("\n"))
        return "\n".join(out) + "\n"


def collision_scan(networks: Iterable[Network], kind: str) -> CollisionReport:
    """Group networks by their ``kind`` matrix and keep groups with distinct members."""
    if kind not in ("multiset", "shortest"):
        raise ValueError(f"unknown matrix kind {kind!r}")
    compute = multiset_matrix if kind == "multiset" else shortest_matrix
    buckets: dict = defaultdict(dict)
    for net in networks:
        buckets[compute(net)].setdefault(certificate(net), net)
    report = CollisionReport(kind)
    for mat in sorted(buckets, key=format_matrix):
        members = list(buckets[mat].values())
        if len(members) >= 2:
            members.sort(key=format_network)
            assert all(not is_isomorphic(a, b) for a, b in itertools.combinations(members, 2))
            report.groups.append(members)
    return report

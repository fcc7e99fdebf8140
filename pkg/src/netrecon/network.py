"""Unrooted binary phylogenetic networks: data model, structure, edits.

A :class:`Network` is an immutable simple graph.  Leaves are the vertices
whose id *is* their label; every other vertex is internal and carries an
opaque string id.  All edit operations return new networks.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

import networkx as nx

from .errors import (
    BadDegree,
    Disconnected,
    DuplicateLabel,
    InvalidTarget,
    NotACutEdge,
    NotSimple,
    UnlabeledLeaf,
)

LABEL_RE = re.compile(r"^[A-Za-z0-9_]+$")

Edge = tuple[str, str]


def _edge(u: str, v: str) -> Edge:
    return (u, v) if u <= v else (v, u)


class Network:
    """Leaf-labelled undirected simple graph with leaf degree 1, internal degree 3."""

    __slots__ = ("_adj", "_leaves", "_cache")

    def __init__(self, edges: Iterable[tuple[str, str]], leaves: Iterable[str], *, check: bool = True):
        leaves = list(leaves)
        edges = list(edges)
        if check:
            adj = _build_adjacency(edges, leaves)
        else:
            adj = {x: set() for x in leaves}
            for u, v in edges:
                adj.setdefault(u, set()).add(v)
                adj.setdefault(v, set()).add(u)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._leaves = frozenset(leaves)
        self._cache = {}
        if check:
            _check_network(self)

    @classmethod
    def _from_adj(cls, adj: dict[str, set[str]], leaves: Iterable[str], check: bool = True) -> "Network":
        net = cls.__new__(cls)
        net._adj = {v: frozenset(ns) for v, ns in adj.items()}
        net._leaves = frozenset(leaves)
        net._cache = {}
        if check:
            _check_network(net)
        return net

    # -- basic accessors ------------------------------------------------------

    @property
    def leaves(self) -> frozenset[str]:
        return self._leaves

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(sorted(self._leaves))

    @property
    def vertices(self) -> frozenset[str]:
        return frozenset(self._adj)

    @property
    def internal_vertices(self) -> list[str]:
        return sorted(v for v in self._adj if v not in self._leaves)

    def neighbors(self, v: str) -> frozenset[str]:
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def is_leaf(self, v: str) -> bool:
        return v in self._leaves

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._adj.get(u, ())

    @property
    def edges(self) -> tuple[Edge, ...]:
        if "edges" not in self._cache:
            self._cache["edges"] = tuple(
                sorted({_edge(u, v) for u, ns in self._adj.items() for v in ns})
            )
        return self._cache["edges"]

    @property
    def num_edges(self) -> int:
        return sum(len(ns) for ns in self._adj.values()) // 2

    def leaf_neighbor(self, x: str) -> str:
        if x not in self._leaves or len(self._adj[x]) != 1:
            raise InvalidTarget(f"{x!r} is not a leaf with a neighbour")
        (p,) = self._adj[x]
        return p

    def adjacency(self) -> dict[str, set[str]]:
        """Mutable copy of the adjacency structure."""
        return {v: set(ns) for v, ns in self._adj.items()}

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self._adj)
        g.add_edges_from(self.edges)
        return g

    def relabel(self, mapping: dict[str, str]) -> "Network":
        """Rename leaves (and optionally vertices); unmapped ids are kept."""
        adj = {mapping.get(v, v): {mapping.get(u, u) for u in ns} for v, ns in self._adj.items()}
        return Network._from_adj(adj, (mapping.get(x, x) for x in self._leaves))

    def __eq__(self, other):
        if not isinstance(other, Network):
            return NotImplemented
        return self._leaves == other._leaves and self._adj == other._adj

    def __hash__(self):
        return hash((self._leaves, self.edges))

    def __repr__(self):
        return f"Network(leaves={list(self.labels)}, edges={self.num_edges})"

    def level(self) -> int:
        return max((b.level for b in blobs(self)), default=0)


# -- validation ---------------------------------------------------------------


def _build_adjacency(edges, leaves) -> dict[str, set[str]]:
    if len(set(leaves)) != len(leaves):
        dup = sorted(x for x in set(leaves) if leaves.count(x) > 1)
        raise DuplicateLabel(f"duplicate leaf labels {dup}")
    adj: dict[str, set[str]] = {x: set() for x in leaves}
    for u, v in edges:
        if u == v:
            raise NotSimple(f"loop at {u!r}")
        if v in adj.get(u, ()):
            raise NotSimple(f"parallel edge {u!r}-{v!r}")
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return adj


def _check_network(net: Network) -> None:
    adj = net._adj
    leaves = net._leaves
    if not leaves:
        raise UnlabeledLeaf("a network needs at least one leaf")
    if len(adj) == 1:
        (only,) = adj
        if only not in leaves:
            raise UnlabeledLeaf(f"singleton vertex {only!r} is not labelled")
        return
    for v, ns in adj.items():
        d = len(ns)
        if v in leaves:
            if d != 1:
                raise BadDegree(v, d)
        elif d == 1:
            raise UnlabeledLeaf(f"degree-1 vertex {v!r} has no label")
        elif d != 3:
            raise BadDegree(v, d)
    start = next(iter(leaves))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    if len(seen) != len(adj):
        raise Disconnected(f"{len(adj) - len(seen)} vertices unreachable from {start!r}")


def validate(edges: Iterable[tuple[str, str]], leaves: Iterable[str]) -> Network:
    """Build a :class:`Network` from a raw edge list, raising on any violation.

    A single leaf with no edges is the singleton network.
    """
    return Network(edges, leaves)


def singleton(x: str) -> Network:
    return Network([], [x])


# -- blobs and cut-edges ------------------------------------------------------


@dataclass(frozen=True)
class Blob:
    vertices: frozenset[str]
    edges: frozenset[Edge]
    level: int
    incident_cut_edges: tuple[tuple[str, str], ...]  # (blob vertex, outside vertex)
    pendant: bool
    leaves: tuple[str, ...]  # labels of leaves contained in the blob

    @property
    def nontrivial_cut_edges(self) -> tuple[tuple[str, str], ...]:
        return tuple(e for e in self.incident_cut_edges if e[1] not in self.leaves)


def blobs(net: Network) -> list[Blob]:
    """All maximal 2-connected subgraphs with at least three vertices."""
    if "blobs" in net._cache:
        return net._cache["blobs"]
    out = []
    if net.num_edges:
        g = net.to_networkx()
        for comp in nx.biconnected_component_edges(g):
            comp = [_edge(u, v) for u, v in comp]
            verts = frozenset(v for e in comp for v in e)
            if len(verts) < 3:
                continue
            cut = sorted(
                (v, u) for v in verts for u in net.neighbors(v) if u not in verts
            )
            contained = tuple(sorted(u for _, u in cut if net.is_leaf(u)))
            nontrivial = [e for e in cut if not net.is_leaf(e[1])]
            out.append(
                Blob(
                    vertices=verts,
                    edges=frozenset(comp),
                    level=len(comp) - len(verts) + 1,
                    incident_cut_edges=tuple(cut),
                    pendant=len(nontrivial) == 1,
                    leaves=contained,
                )
            )
        out.sort(key=lambda b: sorted(b.vertices))
    net._cache["blobs"] = out
    return out


def network_level(net: Network) -> int:
    return max((b.level for b in blobs(net)), default=0)


def cut_edges(net: Network) -> list[Edge]:
    if not net.num_edges:
        return []
    return sorted(_edge(u, v) for u, v in nx.bridges(net.to_networkx()))


def _side(net: Network, start: str, banned: Edge) -> set[str]:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in net.neighbors(v):
            if _edge(u, v) == banned or u in seen:
                continue
            seen.add(u)
            queue.append(u)
    return seen


def cut_edge_partition(net: Network, e: tuple[str, str]) -> tuple[frozenset[str], frozenset[str]]:
    """Leaf bipartition induced by cut-edge ``e``; first part is ``e[0]``'s side."""
    u, v = e
    if not net.has_edge(u, v):
        raise NotACutEdge(f"{u!r}-{v!r} is not an edge")
    side = _side(net, u, _edge(u, v))
    if v in side:
        raise NotACutEdge(f"{u!r}-{v!r} lies on a cycle")
    y = frozenset(x for x in side if net.is_leaf(x))
    return y, net.leaves - y


# -- edits ----------------------------------------------------------------------


class _IdSource:
    """Hands out internal vertex ids ``#n`` not used by the given graph."""

    def __init__(self, used: Iterable[str]):
        top = -1
        for v in used:
            if v.startswith("#") and v[1:].isdigit():
                top = max(top, int(v[1:]))
        self._next = top + 1

    def __call__(self) -> str:
        vid = f"#{self._next}"
        self._next += 1
        return vid


def _suppress(adj: dict[str, set[str]], candidates: Iterable[str], leaves) -> None:
    """Suppress degree-2 internal vertices until none remain."""
    stack = list(candidates)
    while stack:
        v = stack.pop()
        if v not in adj or v in leaves or len(adj[v]) != 2:
            continue
        a, b = adj.pop(v)
        adj[a].discard(v)
        adj[b].discard(v)
        if a == b or b in adj[a]:
            raise NotSimple(f"suppressing {v!r} creates a parallel edge {a!r}-{b!r}")
        adj[a].add(b)
        adj[b].add(a)
        stack.extend((a, b))


def leaf_attachment_edge(net: Network, x: str) -> Edge | None:
    """The edge of ``delete_leaf(net, x)`` from which ``x`` was removed.

    ``None`` when the result is a singleton.
    """
    p = net.leaf_neighbor(x)
    if net.is_leaf(p):
        return None
    a, b = sorted(net.neighbors(p) - {x})
    return _edge(a, b)


def delete_leaf(net: Network, x: str) -> Network:
    """Remove leaf ``x`` and suppress its neighbour."""
    if not net.is_leaf(x):
        raise InvalidTarget(f"{x!r} is not a leaf")
    if len(net.leaves) == 1:
        raise InvalidTarget("cannot delete the only leaf")
    p = net.leaf_neighbor(x)
    adj = net.adjacency()
    del adj[x]
    adj[p].discard(x)
    leaves = net.leaves - {x}
    if net.is_leaf(p):
        return Network._from_adj({p: set()}, leaves)
    _suppress(adj, [p], leaves)
    return Network._from_adj(adj, leaves)


def attach_leaf(net: Network, e: tuple[str, str] | None, x: str) -> Network:
    """Subdivide edge ``e`` and hang the new leaf ``x`` there.

    On a singleton network ``e`` must be ``None`` and ``x`` is joined
    directly to the existing leaf.
    """
    if x in net.vertices:
        raise InvalidTarget(f"{x!r} already used")
    adj = net.adjacency()
    if len(net.leaves) == 1 and net.num_edges == 0:
        if e is not None:
            raise InvalidTarget("singleton network has no edges")
        (y,) = net.leaves
        adj[y].add(x)
        adj[x] = {y}
        return Network._from_adj(adj, net.leaves | {x})
    if e is None or not net.has_edge(*e):
        raise InvalidTarget(f"{e!r} is not an edge")
    u, v = e
    p = _IdSource(adj)()
    adj[u].discard(v)
    adj[v].discard(u)
    adj[p] = {u, v, x}
    adj[u].add(p)
    adj[v].add(p)
    adj[x] = {p}
    return Network._from_adj(adj, net.leaves | {x})


def split_leaf_into_cherry(net: Network, z: str, x: str, y: str) -> Network:
    """Replace leaf ``z`` by an internal vertex carrying leaves ``x`` and ``y``."""
    if not net.is_leaf(z):
        raise InvalidTarget(f"{z!r} is not a leaf")
    adj = net.adjacency()
    c = _IdSource(adj)()
    ns = adj.pop(z)
    for u in ns:
        adj[u].discard(z)
        adj[u].add(c)
    adj[c] = set(ns) | {x, y}
    adj[x] = {c}
    adj[y] = {c}
    return Network._from_adj(adj, (net.leaves - {z}) | {x, y})


def pendant_side(net: Network, blob: Blob) -> tuple[str, str, set[str]]:
    """For a pendant blob: (blob end w, outside end o, vertices on w's side)."""
    if not blob.pendant:
        raise InvalidTarget("blob is not pendant")
    ((w, o),) = blob.nontrivial_cut_edges
    return w, o, _side(net, w, _edge(w, o))


def collapse_pendant_blob(net: Network, blob: Blob, z: str) -> Network:
    """Replace a pendant blob and its leaves by a single leaf ``z``."""
    w, o, side = pendant_side(net, blob)
    if z in net.vertices and z not in side:
        raise InvalidTarget(f"{z!r} already used")
    adj = {v: set(ns) - side for v, ns in net.adjacency().items() if v not in side}
    adj[o].add(z)
    adj[z] = {o}
    leaves = (net.leaves - side) | {z}
    return Network._from_adj(adj, leaves)


def pendant_template(net: Network, blob: Blob, z: str) -> Network:
    """The pendant blob with its leaves, plus a stub leaf ``z`` in place of the rest."""
    w, o, side = pendant_side(net, blob)
    adj = {v: set(net.neighbors(v)) & side for v in side}
    adj[w].add(z)
    adj[z] = {w}
    return Network._from_adj(adj, (net.leaves & side) | {z})


def replace_leaf(net: Network, z: str, template: Network) -> Network:
    """Glue ``template`` into ``net`` at leaf ``z``.

    ``template`` must contain a stub leaf named ``z``; the stub's neighbour is
    joined to ``z``'s neighbour in ``net``.  Internal ids of the template are
    renamed to fresh ids.
    """
    if not net.is_leaf(z) or not template.is_leaf(z):
        raise InvalidTarget(f"{z!r} must be a leaf of both networks")
    clash = (template.leaves - {z}) & net.vertices
    if clash:
        raise InvalidTarget(f"template leaves {sorted(clash)} already in network")
    if len(net.leaves) == 1:
        # ``net`` is just ``z``: the template minus its stub is the answer.
        if len(template.leaves) < 2:
            raise InvalidTarget("template has no leaves besides the stub")
        return delete_leaf(template, z)
    fresh = _IdSource(net.vertices)
    rename = {v: fresh() for v in template.internal_vertices}
    adj = net.adjacency()
    o = net.leaf_neighbor(z)
    w = rename.get(template.leaf_neighbor(z), template.leaf_neighbor(z))
    del adj[z]
    adj[o].discard(z)
    for v in template.vertices:
        if v == z:
            continue
        nv = rename.get(v, v)
        adj[nv] = {rename.get(u, u) for u in template.neighbors(v) if u != z}
    adj[o].add(w)
    adj[w].add(o)
    return Network._from_adj(adj, (net.leaves - {z}) | (template.leaves - {z}))


def delete_edge(net: Network, e: tuple[str, str]) -> Network:
    """Remove a non-bridge edge between internal vertices and suppress its ends."""
    u, v = e
    if not net.has_edge(u, v) or net.is_leaf(u) or net.is_leaf(v):
        raise InvalidTarget(f"{e!r} is not an internal edge")
    adj = net.adjacency()
    adj[u].discard(v)
    adj[v].discard(u)
    _suppress(adj, [u, v], net.leaves)
    out = Network._from_adj(adj, net.leaves, check=False)
    _check_network(out)
    return out


def add_bridge(net: Network, e1: tuple[str, str], e2: tuple[str, str]) -> Network:
    """Subdivide two distinct edges and join the two new vertices."""
    if _edge(*e1) == _edge(*e2):
        raise InvalidTarget("bridging an edge to itself creates a parallel edge")
    adj = net.adjacency()
    fresh = _IdSource(adj)
    p, q = fresh(), fresh()
    for mid, (a, b) in ((p, e1), (q, e2)):
        if b not in adj.get(a, ()):
            raise InvalidTarget(f"{(a, b)!r} is not an edge")
        adj[a].discard(b)
        adj[b].discard(a)
        adj[a].add(mid)
        adj[b].add(mid)
        adj[mid] = {a, b}
    adj[p].add(q)
    adj[q].add(p)
    return Network._from_adj(adj, net.leaves)


def shortest_paths_from(net: Network, source: str) -> dict[str, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in net.neighbors(v):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def iter_simple_path_lengths(net: Network, source: str) -> Iterator[tuple[str, int]]:
    """Yield ``(leaf, length)`` for every simple path from ``source`` to another leaf."""
    adj = net._adj
    leaves = net._leaves
    on_path = {source}

    def walk(v, depth):
        for u in adj[v]:
            if u in on_path:
                continue
            if u in leaves:
                yield u, depth + 1
                continue
            on_path.add(u)
            yield from walk(u, depth + 1)
            on_path.discard(u)

    yield from walk(source, 0)

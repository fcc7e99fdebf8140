"""Label-preserving isomorphism via a canonical certificate.

Leaves are pre-coloured by label, colours are refined by neighbour
multisets, and remaining ties are broken by individualising each member of
the first non-singleton cell in turn, keeping the lexicographically smallest
edge certificate.  Leaf labels make ties rare, so the search stays tiny on
desk-scale networks.
"""

from __future__ import annotations

from collections import deque

from .network import Network


def _refine(colors: list[int], nbrs: list[list[int]]) -> list[int]:
    ncol = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(len(colors))]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(ranking) == ncol:
            return new
        colors, ncol = new, len(ranking)


def _search(colors, nbrs, edges, best):
    colors = _refine(colors, nbrs)
    n = len(colors)
    if len(set(colors)) == n:
        cert = tuple(sorted((min(colors[a], colors[b]), max(colors[a], colors[b])) for a, b in edges))
        if best[0] is None or cert < best[0]:
            best[0] = cert
            best[1] = colors
        return
    counts = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    target = min(c for c, k in counts.items() if k > 1)
    for v in [u for u in range(n) if colors[u] == target]:
        split = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colors)]
        _search(split, nbrs, edges, best)


def canonical_labeling(net: Network) -> tuple[tuple, dict[str, int]]:
    """Return ``(certificate, rank)``; ``rank`` maps each vertex to its canonical position.

    Two networks on the same labels are isomorphic (fixing leaf labels) iff
    their certificates are equal.
    """
    cached = net._cache.get("canon")
    if cached is not None:
        return cached
    verts = sorted(net.vertices)
    index = {v: i for i, v in enumerate(verts)}
    labels = net.labels
    leaf_rank = {x: i for i, x in enumerate(labels)}
    colors = [leaf_rank.get(v, len(labels)) for v in verts]
    nbrs = [[index[u] for u in net.neighbors(v)] for v in verts]
    edges = [(index[a], index[b]) for a, b in net.edges]
    best = [None, None]
    _search(colors, nbrs, edges, best)
    cert = (labels, len(verts), best[0])
    rank = {v: best[1][i] for i, v in enumerate(verts)}
    net._cache["canon"] = (cert, rank)
    return cert, rank


def certificate(net: Network) -> tuple:
    return canonical_labeling(net)[0]


def is_isomorphic(n1: Network, n2: Network) -> bool:
    """True iff some graph isomorphism maps every leaf to the leaf with the same label."""
    if n1.leaves != n2.leaves or len(n1.vertices) != len(n2.vertices) or n1.num_edges != n2.num_edges:
        return False
    return certificate(n1) == certificate(n2)


def canonical_names(net: Network) -> dict[str, str]:
    """Map internal ids to ``_0, _1, ...`` in BFS order from the smallest leaf.

    Neighbours are visited in canonical rank order, so isomorphic networks
    receive identical names.
    """
    _, rank = canonical_labeling(net)
    names = {x: x for x in net.leaves}
    start = net.labels[0]
    seen = {start}
    queue = deque([start])
    counter = 0
    while queue:
        v = queue.popleft()
        for u in sorted(net.neighbors(v), key=rank.__getitem__):
            if u in seen:
                continue
            seen.add(u)
            if u not in names:
                names[u] = f"_{counter}"
                counter += 1
            queue.append(u)
    return names


def canonical_network(net: Network) -> Network:
    names = canonical_names(net)
    return Network._from_adj(
        {names[v]: {names[u] for u in net.neighbors(v)} for v in net.vertices}, net.leaves, check=False
    )

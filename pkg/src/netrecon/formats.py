"""Text formats for networks and distance matrices.

Network file::

    leaves: a,b,c
    _0 _1
    _0 a
    ...

Matrix file, one line per unordered leaf pair in lexicographic order::

    a b : 3,6,6

Shortest matrices carry a single integer per line.  A one-leaf matrix has no
pairs, so it is written as a lone ``leaves:`` line.
"""

from __future__ import annotations

from pathlib import Path

from .distances import MultisetMatrix, ShortestMatrix, pair
from .errors import ParseError
from .isomorphism import canonical_names
from .multiset import DistanceMultiset
from .network import LABEL_RE, Network

RESERVED_PREFIX = "_"


def check_label(label: str) -> None:
    if not LABEL_RE.match(label):
        raise ParseError(f"bad leaf label {label!r}")
    if label.startswith(RESERVED_PREFIX):
        raise ParseError(f"leaf label {label!r} uses the reserved '_' prefix")


def _parse_leaves_line(line: str) -> list[str]:
    head, sep, rest = line.partition(":")
    if not sep or head.strip() != "leaves":
        raise ParseError(f"expected 'leaves: ...', got {line!r}")
    labels = [x.strip() for x in rest.split(",") if x.strip()]
    for x in labels:
        check_label(x)
    return labels


def _lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip()]


# -- networks -------------------------------------------------------------------


def parse_network(text: str) -> Network:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty network file")
    labels = _parse_leaves_line(lines[0])
    edges = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 2:
            raise ParseError(f"edge line must have two tokens: {ln!r}")
        edges.append((toks[0], toks[1]))
    return Network(edges, labels)


def format_network(net: Network) -> str:
    names = canonical_names(net)
    edges = sorted(pair(names[u], names[v]) for u, v in net.edges)
    out = ["leaves: " + ",".join(net.labels)]
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def read_network(path) -> Network:
    return parse_network(Path(path).read_text(encoding="utf-8"))


def write_network(net: Network, path) -> None:
    Path(path).write_text(format_network(net), encoding="utf-8", newline="\n")


# -- matrices -------------------------------------------------------------------


def parse_matrix(text: str, kind: str):
    """Parse a ``"multiset"`` or ``"shortest"`` matrix."""
    if kind not in ("multiset", "shortest"):
        raise ValueError(f"unknown matrix kind {kind!r}")
    lines = _lines(text)
    labels: set[str] = set()
    if lines and lines[0].startswith("leaves"):
        labels.update(_parse_leaves_line(lines[0]))
        lines = lines[1:]
    cells = {}
    for ln in lines:
        left, sep, right = ln.partition(":")
        toks = left.split()
        if not sep or len(toks) != 2:
            raise ParseError(f"bad matrix line {ln!r}")
        x, y = toks
        check_label(x)
        check_label(y)
        if x == y:
            raise ParseError(f"diagonal entry in {ln!r}")
        try:
            values = [int(v) for v in right.split(",")]
        except ValueError:
            raise ParseError(f"bad lengths in {ln!r}") from None
        if any(v < 0 for v in values):
            raise ParseError(f"negative length in {ln!r}")
        key = pair(x, y)
        if key in cells:
            raise ParseError(f"duplicate pair {key}")
        if kind == "shortest":
            if len(values) != 1:
                raise ParseError(f"shortest matrix cell needs one value: {ln!r}")
            cells[key] = values[0]
        else:
            cells[key] = DistanceMultiset(values)
        labels.update(key)
    if not labels:
        raise ParseError("empty matrix file")
    cls = MultisetMatrix if kind == "multiset" else ShortestMatrix
    try:
        return cls(labels, cells)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_matrix(matrix) -> str:
    if len(matrix) == 1:
        return f"leaves: {matrix.labels[0]}\n"
    out = []
    for (x, y), v in matrix.pairs():
        if isinstance(v, DistanceMultiset):
            out.append(f"{x} {y} : " + ",".join(map(str, v.values)))
        else:
            out.append(f"{x} {y} : {v}")
    return "\n".join(out) + "\n"


def read_matrix(path, kind: str):
    return parse_matrix(Path(path).read_text(encoding="utf-8"), kind)


def write_matrix(matrix, path) -> None:
    Path(path).write_text(format_matrix(matrix), encoding="utf-8", newline="\n")

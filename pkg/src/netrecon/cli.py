"""Command-line entry point.

Exit codes: 0 success, 1 usage, 2 unreadable or invalid input, 3 matrix not
realizable, 4 internal error, 5 ``check-iso`` found the networks differ.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .distances import multiset_matrix, shortest_matrix
from .errors import (
    BudgetExceeded,
    InconsistentChains,
    MultisetError,
    NetworkError,
    NotRealizable,
    ParseError,
    UnknownFixture,
)
from .formats import check_label, format_matrix, format_network, read_matrix, read_network, write_network
from .isomorphism import is_isomorphic
from .level1 import reconstruct_l1
from .level2 import reconstruct_l2
from .oracle import FIXTURE_NAMES, EnumSpec, collision_scan, enumerate_networks, fixtures
from .small import reconstruct_l2_small_shortest

EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_NOT_REALIZABLE = 3
EXIT_INTERNAL = 4
EXIT_NOT_ISOMORPHIC = 5

MODES = {
    "l1-shortest": ("shortest", reconstruct_l1),
    "l2-multiset": ("multiset", reconstruct_l2),
    "l2-small-shortest": ("shortest", reconstruct_l2_small_shortest),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def cmd_dist(args) -> int:
    net = read_network(args.net)
    mat = multiset_matrix(net) if args.kind == "multiset" else shortest_matrix(net)
    _emit(format_matrix(mat), args.out)
    return 0


def cmd_reconstruct(args) -> int:
    kind, fn = MODES[args.mode]
    net = fn(read_matrix(args.matrix, kind))
    _emit(format_network(net), args.out)
    return 0


def cmd_check_iso(args) -> int:
    same = is_isomorphic(read_network(args.a), read_network(args.b))
    print("isomorphic" if same else "not isomorphic")
    return 0 if same else EXIT_NOT_ISOMORPHIC


def cmd_enumerate(args) -> int:
    labels = [x.strip() for x in args.leaves.split(",") if x.strip()]
    for x in labels:
        check_label(x)
    try:
        spec = EnumSpec(tuple(labels), args.max_edges, args.max_level)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    count = 0
    for i, net in enumerate(enumerate_networks(spec)):
        write_network(net, out / f"net_{i:06d}.net")
        count += 1
    print(f"{count} networks written to {out}")
    return 0


def cmd_collide(args) -> int:
    folder = Path(args.indir)
    if not folder.is_dir():
        raise UsageError(f"{folder} is not a directory")
    nets = [read_network(p) for p in sorted(folder.glob("*.net"))]
    _emit(collision_scan(nets, args.kind).format(), args.out)
    return 0


def cmd_fixtures(args) -> int:
    got = fixtures(args.name)
    if isinstance(got, tuple):
        out = Path(args.out)
        for net, tag in zip(got, "ab"):
            write_network(net, out.with_name(f"{out.stem}{tag}{out.suffix}"))
    else:
        write_network(got, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="netrecon", description="Distance matrices and reconstruction of phylogenetic networks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("dist", help="distance matrix of a network")
    s.add_argument("--net", required=True)
    s.add_argument("--kind", required=True, choices=["multiset", "shortest"])
    s.add_argument("--out")
    s.set_defaults(func=cmd_dist)

    s = sub.add_parser("reconstruct", help="network from a distance matrix")
    s.add_argument("--matrix", required=True)
    s.add_argument("--mode", required=True, choices=sorted(MODES))
    s.add_argument("--out")
    s.set_defaults(func=cmd_reconstruct)

    s = sub.add_parser("check-iso", help="exit 0 iff two networks are isomorphic")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.set_defaults(func=cmd_check_iso)

    s = sub.add_parser("enumerate", help="write every network within the budgets")
    s.add_argument("--leaves", required=True, help="comma-separated labels")
    s.add_argument("--max-edges", required=True, type=int)
    s.add_argument("--max-level", required=True, type=int)
    s.add_argument("--out", required=True, help="output directory")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("collide", help="report networks sharing a matrix")
    s.add_argument("--in", dest="indir", required=True, help="directory of .net files")
    s.add_argument("--kind", required=True, choices=["multiset", "shortest"])
    s.add_argument("--out")
    s.set_defaults(func=cmd_collide)

    s = sub.add_parser("fixtures", help="write a built-in example network")
    s.add_argument("--name", required=True, choices=FIXTURE_NAMES)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_fixtures)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"netrecon: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotRealizable as exc:
        print(f"netrecon: not realizable: {exc.diagnostic()}", file=sys.stderr)
        return EXIT_NOT_REALIZABLE
    except (ParseError, NetworkError, MultisetError, InconsistentChains, UnknownFixture, OSError) as exc:
        print(f"netrecon: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"netrecon: enumeration budget exceeded: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"netrecon: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point.

Graphs move between commands as graph6 lines; reports are JSON. Exit
status is 0 on success, 1 on invalid input or parameters, and 2 when a
verification suite finds a mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from collections.abc import Sequence

from . import enumeration, families, formulas, transforms
from .errors import DomainError, GraphError
from .graph import Graph
from .graph6 import from_graph6, to_graph6
from .matching import maximum_matching


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(f"{self.prog}: {message}")


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise DomainError(f"--params expects comma-separated integers, got {text!r}") from exc


def _emit_graph(g: Graph, fmt: str, out) -> None:
    out.write((g.to_json() if fmt == "json" else to_graph6(g).decode()) + "\n")


def _read_graphs(stream) -> list[Graph]:
    return [from_graph6(line) for line in stream.read().splitlines() if line.strip()]


def _build(family: str, vals: list[int]) -> Graph:
    if family == "g3":
        if len(vals) == 2:
            return families.build_g3(families.G3Params.reduced(*vals))
        if len(vals) == 6:
            return families.build_g3(families.G3Params(*vals))
        raise DomainError("g3 takes a,j or a,b,c,j,k,l")
    if family == "g4":
        if len(vals) == 3:
            return families.build_g4(families.G4Params.reduced(*vals))
        if len(vals) == 8:
            return families.build_g4(families.G4Params(*vals))
        raise DomainError("g4 takes a,c,j or a,b,c,d,h,j,k,l")
    if len(vals) != 2:
        raise DomainError(f"{family} takes n,m")
    if family == "anm":
        return families.build_anm(families.AnmParams(*vals))
    if family == "duzhou-tree":
        return families.build_duzhou_min_tree(families.DuZhouParams(*vals, kind="tree-min"))
    return families.build_duzhou_min_unicyclic(families.DuZhouParams(*vals, kind="unicyclic-min"))


BOUNDS = {
    "max-uni": formulas.bound_max_unicyclic,
    "dank-min": formulas.bound_dankelmann_min,
    "dank-max": formulas.bound_dankelmann_max,
    "dz-tree": formulas.bound_duzhou_tree_min,
    "dz-uni": formulas.bound_duzhou_unicyclic_min,
}


def _cmd_construct(args, out) -> int:
    _emit_graph(_build(args.family, _ints(args.params)), args.format, out)
    return 0


def _cmd_wiener(args, out) -> int:
    from .graph import wiener_index

    for g in _read_graphs(args.stdin):
        out.write(f"{wiener_index(g)}\n")
    return 0


def _cmd_match(args, out) -> int:
    for g in _read_graphs(args.stdin):
        cert = maximum_matching(g)
        if args.format == "json":
            out.write(json.dumps({"size": cert.size, "edges": [list(e) for e in cert.edges]}) + "\n")
        else:
            out.write(f"{cert.size}\n")
    return 0


def _cmd_bound(args, out) -> int:
    out.write(f"{BOUNDS[args.which](args.n, args.m)}\n")
    return 0


def _cmd_transform(args, out) -> int:
    if args.random_n is not None:
        k = args.random_k if args.random_k is not None else 5
        graphs = [transforms.random_unicyclic(args.random_n, k, args.seed)]
    else:
        graphs = _read_graphs(args.stdin)
    for g in graphs:
        if args.op == "spr":
            if None in (args.d, args.branch, args.v):
                raise DomainError("spr needs --d, --branch and --v")
            rep = transforms.spr(g, args.d, args.branch, args.v)
        elif args.op in ("g1", "g2"):
            rep = transforms.cycle_swap(g, args.op.upper())
        else:
            if None in (args.i1, args.i2):
                raise DomainError("path-regraft needs --i1 and --i2")
            rep = transforms.path_regraft(g, args.i1, args.i2)
        out.write(rep.to_json() + "\n")
    return 0


def _cmd_enumerate(args, out) -> int:
    if args.trees:
        gen = enumeration.trees(args.n, cap=args.tree_cap)
    else:
        gen = enumeration.unicyclic_graphs(args.n, jobs=args.jobs)
    for g in gen:
        _emit_graph(g, args.format, out)
    return 0


def _cmd_table(args, out) -> int:
    rows = enumeration.extremal_table(args.n, jobs=args.jobs)
    if args.csv:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "m", "w_max", "extremal_count", "extremal_g6"])
        for r in rows:
            w.writerow([r.n, r.m, r.w_max, len(r.extremal), ";".join(k.decode() for k in r.extremal)])
    else:
        out.write(json.dumps([
            {"n": r.n, "m": r.m, "w_max": r.w_max, "count_searched": r.count_searched,
             "extremal": [k.decode() for k in r.extremal]} for r in rows
        ], indent=2) + "\n")
    return 0


def _cmd_verify(args, out) -> int:
    if args.suite == "main":
        rep = enumeration.verify_main_theorem(args.n_max, jobs=args.jobs)
    elif args.suite == "mono":
        rep = enumeration.verify_monotonicity(args.n_max, jobs=args.jobs)
    elif args.suite == "minima":
        rep = enumeration.verify_minima(args.n_max, tree_n_max=min(args.n_max, args.tree_cap), jobs=args.jobs)
    else:
        rep = enumeration.verify_dankelmann(args.n_max)
    out.write(rep.to_json(indent=2) + "\n")
    return 0 if rep.passed else 2


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["g6", "json"], default="g6")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=_positive, default=1)

    p = _Parser(prog="unicyclic-wiener", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("construct", parents=[common], help="build a family member")
    s.add_argument("--family", required=True, choices=["g3", "g4", "anm", "duzhou-tree", "duzhou-uni"])
    s.add_argument("--params", required=True, help="comma-separated integers")
    s.set_defaults(func=_cmd_construct)

    s = sub.add_parser("wiener", parents=[common], help="Wiener index of graph6 lines on stdin")
    s.set_defaults(func=_cmd_wiener)

    s = sub.add_parser("match", parents=[common], help="matching number of graph6 lines on stdin")
    s.set_defaults(func=_cmd_match)

    s = sub.add_parser("bound", parents=[common], help="evaluate a closed-form bound")
    s.add_argument("--which", required=True, choices=sorted(BOUNDS))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.set_defaults(func=_cmd_bound)

    s = sub.add_parser("transform", parents=[common], help="apply a rewrite, print a JSON report")
    s.add_argument("--op", required=True, choices=["spr", "g1", "g2", "path-regraft"])
    s.add_argument("--d", type=int)
    s.add_argument("--branch", type=int)
    s.add_argument("--v", type=int)
    s.add_argument("--i1", type=int)
    s.add_argument("--i2", type=int)
    s.add_argument("--random-n", type=int, help="use a seeded random unicyclic graph instead of stdin")
    s.add_argument("--random-k", type=int, help="cycle length of the random graph (default 5)")
    s.set_defaults(func=_cmd_transform)

    s = sub.add_parser("enumerate", parents=[common], help="list graphs up to isomorphism")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--trees", action="store_true")
    s.add_argument("--tree-cap", type=int, default=enumeration.TREE_DEFAULT_CAP)
    s.set_defaults(func=_cmd_enumerate)

    s = sub.add_parser("table", parents=[common], help="extremal table for one order")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--csv", action="store_true")
    s.set_defaults(func=_cmd_table)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("--suite", required=True, choices=["main", "mono", "minima", "dankelmann"])
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--tree-cap", type=int, default=enumeration.TREE_DEFAULT_CAP)
    s.set_defaults(func=_cmd_verify)
    return p


def run(argv: Sequence[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.stdin = stdin
        return args.func(args, stdout)
    except _UsageError as exc:
        stderr.write(f"{exc}\n")
        return 1
    except (DomainError, GraphError) as exc:
        stderr.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

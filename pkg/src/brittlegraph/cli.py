"""Command-line entry point.

Exit codes: 0 pass, 1 fail, 2 inconclusive, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .bounds import FAMILIES as BOUND_FAMILIES
from .bounds import BoundParams, BoundTooLarge, bound_ell
from .brittleness import SearchLimitError, brittleness
from .claims import CLAIMS, run_claim
from .connectivity import ConnFn, evaluate
from .formats import FormatError, emit_graph6, parse_graph, to_json_obj
from .graph import FAMILIES, Graph, GraphError, make_family, mask_of
from .lrw import linear_rank_width
from .vertex_minor import apply_word, has_vertex_minor, lc, pv

EXIT_PASS, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _graph_arg(text: str) -> Graph:
    """A graph6/sparse6/JSON string, or a path to a file holding one."""
    if os.path.isfile(text):
        with open(text, "rb") as fh:
            text = fh.readline().decode("ascii", errors="replace")
    try:
        return parse_graph(text)
    except (FormatError, GraphError) as exc:
        raise UsageError(f"cannot parse graph {text!r}: {exc}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated vertex indices, got {text!r}") from None


def _edge_list(text: str) -> list[tuple[int, int]]:
    edges = []
    for token in filter(None, (t.strip() for t in text.split(","))):
        try:
            u, v = token.split("-")
            edges.append((int(u), int(v)))
        except ValueError:
            raise UsageError(f"expected u-v edge pairs, got {token!r}") from None
    return edges


def _emit(args: argparse.Namespace, human: str, machine: object) -> None:
    print(json.dumps(machine, sort_keys=True) if args.json else human)


def _conn(name: str) -> ConnFn:
    try:
        return ConnFn.parse(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# subcommands -------------------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        G = make_family(args.family, *args.params)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    g6 = emit_graph6(G).decode()
    _emit(args, g6, {"graph6": g6, **to_json_obj(G)})
    return EXIT_PASS


def cmd_conn(args: argparse.Namespace) -> int:
    fn = _conn(args.fn)
    G = _graph_arg(args.graph)
    try:
        X = _edge_list(args.set) if fn.on_edges else mask_of(_int_list(args.set))
        value = evaluate(fn, G, X)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, str(value), {"fn": fn.value, "value": value})
    return EXIT_PASS


def cmd_brittleness(args: argparse.Namespace) -> int:
    fn = _conn(args.fn)
    G = _graph_arg(args.graph)
    if args.k < 1:
        raise UsageError("-k must be positive")
    try:
        r = brittleness(fn, G, args.k, max_ground=args.max_ground)
    except SearchLimitError as exc:
        _emit(args, f"inconclusive: {exc}", {"status": "inconclusive", "detail": str(exc)})
        return EXIT_INCONCLUSIVE
    blocks = r.partition.as_lists()
    human = f"{r.value}\npartition: {blocks}\nworst union: {list(r.worst_union)}"
    _emit(args, human, {"fn": fn.value, "k": args.k, "value": r.value, "partition": blocks,
                        "worst_union": list(r.worst_union)})
    return EXIT_PASS


def cmd_lrw(args: argparse.Namespace) -> int:
    G = _graph_arg(args.graph)
    try:
        r = linear_rank_width(G)
    except GraphError as exc:
        _emit(args, f"inconclusive: {exc}", {"status": "inconclusive", "detail": str(exc)})
        return EXIT_INCONCLUSIVE
    _emit(args, f"{r.value}\nlayout: {list(r.layout)}", {"value": r.value, "layout": list(r.layout)})
    return EXIT_PASS


def cmd_vm(args: argparse.Namespace) -> int:
    G = _graph_arg(args.graph)
    if args.vm_command == "contains":
        H = _graph_arg(args.pattern)
        r = has_vertex_minor(G, H, args.limit)
        word = None if r.word is None else str(r.word)
        human = f"{r.status}" + (f": {word}" if word is not None else "") + f" ({r.states} states)"
        _emit(args, human, {"status": r.status, "word": word, "states": r.states})
        return {"found": EXIT_PASS, "absent": EXIT_FAIL}.get(r.status, EXIT_INCONCLUSIVE)
    vs = _int_list(args.vertices)
    if args.vm_command == "lc":
        word = lc(*vs)
    else:
        if len(vs) != 2:
            raise UsageError("pivot needs exactly two vertices u,v")
        word = pv(*vs)
    try:
        H = apply_word(G, word)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    g6 = emit_graph6(H).decode()
    _emit(args, g6, {"graph6": g6, "word": str(word), **to_json_obj(H)})
    return EXIT_PASS


def cmd_verify(args: argparse.Namespace) -> int:
    scale: str | int = args.scale
    if scale not in ("small", "medium"):
        try:
            scale = int(scale)
        except ValueError:
            raise UsageError(f"--scale must be small, medium or an integer, got {scale!r}") from None
    if args.claim == "all":
        ids = list(CLAIMS)
    elif args.claim in CLAIMS:
        ids = [args.claim]
    else:
        raise UsageError(f"unknown claim {args.claim!r}; known claims: all, {', '.join(CLAIMS)}")
    reports = []
    for cid in ids:
        report = run_claim(cid, scale)
        reports.append(report)
        if args.json:
            print(report.to_json(), flush=True)
        else:
            line = f"{report.status.upper():<12} {cid}  ({report.elapsed_ms / 1000:.2f} s)"
            if len(ids) == 1 or not report.passed:
                line += f"\n  witness: {json.dumps(report.to_dict()['witness'])}"
            if report.detail:
                line += f"\n  {report.detail}"
            print(line, flush=True)
    statuses = {r.status for r in reports}
    if "fail" in statuses:
        return EXIT_FAIL
    if "inconclusive" in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


def cmd_bounds(args: argparse.Namespace) -> int:
    if args.k < 1 or args.n < 1:
        raise UsageError("-k and -n must be positive")
    try:
        value = bound_ell(args.family, BoundParams(args.k, args.n))
    except BoundTooLarge as exc:
        _emit(args, f"inconclusive: {exc}", {"status": "inconclusive", "detail": str(exc)})
        return EXIT_INCONCLUSIVE
    _emit(args, str(value), {"family": args.family, "k": args.k, "n": args.n, "value": str(value)})
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    parser = _Parser(prog="brittlegraph", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common], help="emit a family member as graph6")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("conn", parents=[common], help="evaluate a connectivity function")
    p.add_argument("fn", help="vc, ec, matc, cutrk (or kappa, eta, nu, rho, cutrank)")
    p.add_argument("graph")
    p.add_argument("set", help="vertices '0,2' or, for vc, edges '0-1,2-3'")
    p.set_defaults(func=cmd_conn)

    p = sub.add_parser("brittleness", parents=[common], help="exact k-brittleness")
    p.add_argument("fn")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("graph")
    p.add_argument("--max-ground", type=int, default=None)
    p.set_defaults(func=cmd_brittleness)

    p = sub.add_parser("lrw", parents=[common], help="exact linear rank-width")
    p.add_argument("graph")
    p.set_defaults(func=cmd_lrw)

    p = sub.add_parser("vm", help="vertex-minor operations")
    vm = p.add_subparsers(dest="vm_command", required=True, parser_class=_Parser)
    q = vm.add_parser("contains", parents=[common], help="search for a vertex-minor")
    q.add_argument("graph")
    q.add_argument("pattern")
    q.add_argument("--limit", type=int, default=None)
    q.set_defaults(func=cmd_vm)
    for name, helptext in (("lc", "local complementation at each listed vertex"), ("pivot", "pivot on edge u,v")):
        q = vm.add_parser(name, parents=[common], help=helptext)
        q.add_argument("graph")
        q.add_argument("vertices")
        q.set_defaults(func=cmd_vm)

    p = sub.add_parser("verify", parents=[common], help="run a named claim or all of them")
    p.add_argument("claim")
    p.add_argument("--scale", default="small")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", parents=[common], help="explicit thresholds ell(k, n)")
    p.add_argument("family", choices=BOUND_FAMILIES)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

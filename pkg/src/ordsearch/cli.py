"""Command-line front end.

Exit codes: 0 on success with every verdict PASS, 1 when any verdict line
reports FAIL, 2 on usage, syntax or input errors.  Graphs are read from a
file argument, `-` meaning standard input.  All output is deterministic for
identical arguments.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import acceptance
from .graph import (
    DisconnectedGraphError,
    GraphFormatError,
    OrderedGraph,
    deserialize,
    dot_export,
    random_connected_graph,
    relabel,
    serialize,
)
from .ordinal import Ordinal, OrdinalParseError, zeta
from .predicates import (
    closure_samples,
    colex_inverse_key,
    enumerate_traversals,
    is_breadth_first,
    is_depth_first,
    is_traversal,
    verify_quotient_stability,
    verify_subset_stability,
)
from .search import (
    alt_search_with_counts,
    bfs_search,
    deterministic_search,
    traversal_tree,
)
from .witness import build_zeta_witness, format_manifest, verify_witness


def _read_graph(path: str) -> OrderedGraph:
    if path == "-":
        return deserialize(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as handle:
        return deserialize(handle.read())


def _fmt(order) -> str:
    return " ".join(map(str, order))


class _Verdicts:
    """Collects PASS/FAIL lines; any FAIL turns the exit code into 1."""

    def __init__(self):
        self.failed = False

    def emit(self, name: str, ok: bool, note: str = "") -> None:
        line = f"{name}: {'PASS' if ok else 'FAIL'}"
        if note:
            line += f" [{note}]"
        print(line)
        if not ok:
            self.failed = True

    def exit_code(self) -> int:
        return 1 if self.failed else 0


def _cmd_search(args) -> int:
    g = _read_graph(args.graph)
    trace = deterministic_search(g, args.start)
    print(_fmt(trace.visit_order))
    if args.trace:
        for line in trace.stage_lines():
            print(line)
    return 0


def _cmd_bfs(args) -> int:
    g = _read_graph(args.graph)
    trace = bfs_search(g, args.start)
    print(_fmt(trace.visit_order))
    if args.trace:
        for line in trace.stage_lines():
            print(line)
    return 0


def _cmd_alt(args) -> int:
    g = _read_graph(args.graph)
    order, counts = alt_search_with_counts(g, args.start)
    print(_fmt(order))
    if args.stats:
        print(f"splits: {counts['splits']}")
        print(f"scanned: {counts['scanned']}")
    return 0


def _cmd_tree(args) -> int:
    g = _read_graph(args.graph)
    if args.bfs:
        order = bfs_search(g, args.start).visit_order
    else:
        order = deterministic_search(g, args.start).visit_order
    tree = traversal_tree(g, order)
    if args.dot:
        print(dot_export(tree, traversal=order), end="")
    else:
        print(serialize(tree), end="")
    return 0


def _cmd_check(args) -> int:
    g = _read_graph(args.graph)
    order = tuple(args.order)
    verdicts = _Verdicts()
    if args.kind == "traversal":
        verdicts.emit("traversal", is_traversal(g, order))
    else:
        name = {"bfs": "breadth-first", "dfs": "depth-first"}[args.kind]
        if not is_traversal(g, order):
            verdicts.emit(name, False, "not a traversal")
        elif args.kind == "bfs":
            verdicts.emit(name, is_breadth_first(g, order))
        else:
            verdicts.emit(name, is_depth_first(g, order))
    return verdicts.exit_code()


def _cmd_enumerate(args) -> int:
    g = _read_graph(args.graph)
    kind = {"all": "all", "bfs": "breadth_first", "dfs": "depth_first"}[args.kind]
    ts = enumerate_traversals(g, kind, fixed_start=args.start)
    for order in ts.sorted_orders():
        print(_fmt(order))
    return 0


def _cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    verdicts = _Verdicts()
    if args.suite == "lexmin":
        tau = deterministic_search(g).visit_order
        ts = enumerate_traversals(g, "all", fixed_start=0)
        verdicts.emit("lex-min-traversal", tau == min(ts.orders))
        beta = bfs_search(g).visit_order
        bf = enumerate_traversals(g, "breadth_first", fixed_start=0)
        verdicts.emit("lex-min-breadth-first", beta == min(bf.orders))
    elif args.suite == "colexmax":
        tau = deterministic_search(g).visit_order
        ts = enumerate_traversals(g, "all", fixed_start=0)
        verdicts.emit("colex-max-inverse", tau == max(ts.orders, key=colex_inverse_key))
    elif args.suite == "stability":
        sets = closure_samples(g, args.seed, 12)
        verdicts.emit(
            "subset-stability",
            all(verify_subset_stability(g, w) for w in sets),
            f"{len(sets)} closed sets",
        )
        singletons = [{v} for v in range(g.vertex_count)]
        verdicts.emit("quotient-stability-singletons", verify_quotient_stability(g, singletons))
        verdicts.emit(
            "quotient-stability-whole",
            verify_quotient_stability(g, [set(range(g.vertex_count))]),
        )
    else:
        identity = tuple(range(g.vertex_count))
        tau = deterministic_search(g).visit_order
        beta = bfs_search(g).visit_order
        if is_traversal(g, identity):
            verdicts.emit("search-fixes-traversals", tau == identity)
        else:
            verdicts.emit("search-fixes-traversals", True, "vacuous: input order is not a traversal")
        verdicts.emit(
            "idempotent", deterministic_search(relabel(g, tau)).visit_order == identity
        )
        verdicts.emit(
            "bfs-fixed-by-search",
            deterministic_search(relabel(g, beta)).visit_order == identity,
        )
        verdicts.emit(
            "search-tree-retraversal",
            deterministic_search(traversal_tree(g, tau)).visit_order == tau,
        )
        verdicts.emit(
            "bfs-tree-retraversal", bfs_search(traversal_tree(g, beta)).visit_order == beta
        )
        after = tuple(tau[v] for v in bfs_search(relabel(g, tau)).visit_order)
        print(f"note: bfs-after-search equals bfs on this input: {'yes' if after == beta else 'no'}")
        if args.probes:
            rng = random.Random(args.seed)
            differed = 0
            for _ in range(args.probes):
                perm = list(range(g.vertex_count))
                rng.shuffle(perm)
                h = relabel(g, perm)
                beta_h = bfs_search(h).visit_order
                tau_h = deterministic_search(h).visit_order
                after_h = tuple(tau_h[v] for v in bfs_search(relabel(h, tau_h)).visit_order)
                if after_h != beta_h:
                    differed += 1
            print(
                f"note: bfs-after-search differed from bfs on {differed} of "
                f"{args.probes} probed orders"
            )
    return verdicts.exit_code()


def _cmd_witness(args) -> int:
    build = build_zeta_witness(args.m, args.n, args.k)
    print(format_manifest(build), end="")
    if args.verify:
        verdict = verify_witness(build)
        for line in verdict.lines():
            print(line)
        return 0 if verdict.all_pass() else 1
    return 0


def _cmd_zeta(args) -> int:
    value = zeta(Ordinal.parse(args.ordinal))
    print(value)
    return 0


def _cmd_random(args) -> int:
    g = random_connected_graph(args.n, args.density, args.seed)
    print(serialize(g), end="")
    return 0


def _cmd_selftest(args) -> int:
    if args.only is not None:
        matches = [c for c in acceptance.CRITERIA if c.number == args.only]
        if not matches:
            print(f"no criterion numbered {args.only}", file=sys.stderr)
            return 2
        criterion = matches[0]
        ok, elapsed, detail = acceptance.run_criterion(criterion)
        line = f"criterion {criterion.number} {criterion.name}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s)"
        if detail:
            line += f" [{detail[:120]}]"
        print(line)
        return 0 if ok else 1
    return 0 if acceptance.run_all() else 1


def _add_graph_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("graph", help="graph file in the line format, or - for stdin")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordsearch",
        description="Graph search traversals, order predicates, ordinal bounds "
        "and witness constructions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", help="deterministic search traversal")
    _add_graph_arg(p)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--trace", action="store_true", help="print one line per stage")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("bfs", help="breadth-first traversal")
    _add_graph_arg(p)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=_cmd_bfs)

    p = sub.add_parser("alt", help="divide-and-conquer traversal")
    _add_graph_arg(p)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--stats", action="store_true", help="print work counters")
    p.set_defaults(func=_cmd_alt)

    p = sub.add_parser("tree", help="spanning tree of a search run")
    _add_graph_arg(p)
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--traversal", action="store_true", help="use deterministic search")
    kind.add_argument("--bfs", action="store_true", help="use breadth-first search")
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--dot", action="store_true", help="emit DOT instead of the line format")
    p.set_defaults(func=_cmd_tree)

    p = sub.add_parser("check", help="test an order against a predicate")
    _add_graph_arg(p)
    p.add_argument("--order", type=int, nargs="+", required=True)
    p.add_argument("--kind", choices=("traversal", "bfs", "dfs"), required=True)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("enumerate", help="list all orders of a kind")
    _add_graph_arg(p)
    p.add_argument("--kind", choices=("all", "bfs", "dfs"), required=True)
    p.add_argument("--start", type=int, default=None)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run a verdict suite on a graph")
    _add_graph_arg(p)
    p.add_argument(
        "--suite", choices=("lexmin", "colexmax", "stability", "identities"), required=True
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--probes",
        type=int,
        default=0,
        help="identities suite: also probe N random relabelings for "
        "bfs-after-search disagreements (informational)",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("witness", help="build a truncated witness graph")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="append certificate verdicts")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("zeta", help="order-type bound of an ordinal")
    p.add_argument("ordinal", help="ordinal text, e.g. w^2*3+w+4")
    p.set_defaults(func=_cmd_zeta)

    p = sub.add_parser("random", help="seeded random connected graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_random)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--only", type=int, default=None, help="run a single criterion by number")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, OrdinalParseError, DisconnectedGraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

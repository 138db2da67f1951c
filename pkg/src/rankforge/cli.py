"""Batch command-line surface. Graphs travel as graph6 on stdin/stdout.

Exit codes: 0 success / theorem verified, 1 theorem counterexample found,
2 usage or guard error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import codes as codes_mod
from . import enumeration as enum_mod
from .canonical import dumps_report, from_graph6, to_graph6
from .constructions import (
    bipartite_remark_graph,
    bounds,
    extremal_triangle_free,
    extremal_triangle_free_recursive,
    odd_subset_incidence_graph,
    subset_incidence_graph,
)
from .graphs import (
    Graph,
    bipartition,
    bits,
    independence_number,
    is_reduced,
    is_triangle_free,
    mask_of,
    reduce_graph,
)
from .linalg import adjacency_matrix, rank_exact
from .structure import (
    max_subgraph_below_rank,
    obstruction_free,
    rank_drop_neighborhood,
    rank_drop_symdiff,
)

USAGE_ERROR = 2
COUNTEREXAMPLE = 1


def _read_graphs(source: str) -> list[Graph]:
    if source == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(source) as fh:
            lines = fh.read().splitlines()
    graphs = [from_graph6(line) for line in lines if line.strip()]
    if not graphs:
        raise ValueError("no graph6 input")
    return graphs


def _read_one_graph(source: str) -> Graph:
    graphs = _read_graphs(source)
    if len(graphs) != 1:
        raise ValueError("expected exactly one graph6 line")
    return graphs[0]


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _cmd_bounds(args) -> int:
    table = bounds(args.r)
    lines = [f"rank r = {table.rank}"]
    lines.append(f"  reduced max order          2^r-1  = {table.max_order}")
    if table.construction_order is not None:
        lines.append(f"  doubling construction      mu(r)  = {table.construction_order}")
    if table.tree_max_order is not None:
        lines.append(f"  tree max order             t(r)   = {table.tree_max_order}")
    if table.bipartite_max_order is not None:
        lines.append(f"  bipartite max order        b(r)   = {table.bipartite_max_order}")
    if table.triangle_free_max_order is not None:
        lines.append(
            f"  triangle-free non-bipartite max order  "
            f"c({table.rank}) = {table.triangle_free_max_order}"
        )
    print("\n".join(lines))
    return 0


def _cmd_construct(args) -> int:
    kind = args.kind.upper() if args.kind.lower() != "remark" else "remark"
    p = args.param
    if kind == "B":
        g = subset_incidence_graph(p)
    elif kind == "O":
        g = odd_subset_incidence_graph(p)
    elif kind == "C":
        g = extremal_triangle_free_recursive(p) if args.recursive else extremal_triangle_free(p).graph
    elif kind == "remark":
        g = bipartite_remark_graph(p)
    else:
        raise ValueError(f"unknown construction {args.kind!r}")
    _emit(to_graph6(g), args.out)
    return 0


def _cmd_rank(args) -> int:
    for g in _read_graphs(args.input):
        print(rank_exact(adjacency_matrix(g)))
    return 0


def _cmd_reduce(args) -> int:
    for g in _read_graphs(args.input):
        print(to_graph6(reduce_graph(g)))
    return 0


def _cmd_check(args) -> int:
    for g in _read_graphs(args.input):
        if args.property == "reduced":
            print("true" if is_reduced(g) else "false")
        elif args.property == "trianglefree":
            print("true" if is_triangle_free(g) else "false")
        elif args.property == "bipartite":
            parts = bipartition(g)
            if parts is None:
                print("false")
            else:
                print(f"true parts={parts[0].bit_count()},{parts[1].bit_count()}")
        elif args.property == "alpha":
            size, witness = independence_number(g)
            print(f"{size} witness={','.join(map(str, bits(witness)))}")
    return 0


def _cmd_lemma(args) -> int:
    g = _read_one_graph(args.input)
    if args.which == "neighborhood":
        if args.v is None:
            raise ValueError("lemma neighborhood needs --v")
        lhs, rhs, holds = rank_drop_neighborhood(g, args.v)
        print(f"rank(G-N(v))={lhs} rank(G)-2={rhs} holds={str(holds).lower()}")
        return 0 if holds else COUNTEREXAMPLE
    if args.which == "symdiff":
        if args.u is None or args.v is None:
            raise ValueError("lemma symdiff needs --u and --v")
        lhs, rhs, holds = rank_drop_symdiff(g, args.u, args.v)
        print(f"rank(G-(N(u)^N(v)))={lhs} rank(G)-2={rhs} holds={str(holds).lower()}")
        return 0 if holds else COUNTEREXAMPLE
    if args.which == "lov":
        report = max_subgraph_below_rank(g, args.gap)
        payload = report.to_payload()
        payload["obstruction_free"] = obstruction_free(report)
        text = dumps_report(payload)
        _emit(text, args.report)
        ok = all(v.ok for v in report.verdicts.values())
        return 0 if ok else COUNTEREXAMPLE
    raise ValueError(f"unknown lemma {args.which!r}")


def _parse_code(source: str) -> codes_mod.BinaryCode:
    if source == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(source) as fh:
            lines = fh.read().splitlines()
    return codes_mod.code_from_lines(lines)


def _cmd_code(args) -> int:
    if args.which == "singleton":
        code = _parse_code(args.input)
        d = args.d if args.d is not None else codes_mod.min_distance(code)
        verdict = codes_mod.singleton_verify(code, d)
        print(
            f"size={len(code)} bound={verdict.bound} holds={str(verdict.holds).lower()} "
            f"equality={verdict.equality}"
        )
        return 0 if verdict.holds else COUNTEREXAMPLE
    if args.which == "plotkin":
        g = _read_one_graph(args.input)
        if args.set:
            s = mask_of(int(tok) for tok in args.set.split(","))
        else:
            _, s = independence_number(g)
        res = codes_mod.plotkin_bound_check(g, s)
        print(
            f"set_size={s.bit_count()} bound={res.bound} min_symdiff={res.min_symdiff} "
            f"holds={str(res.holds).lower()}"
        )
        return 0 if res.holds else COUNTEREXAMPLE
    if args.which == "f2n":
        code = _parse_code(args.input)
        res = codes_mod.rowspace_distance2_bound(code)
        print(f"size={len(code)} bound={res.bound} holds={str(res.holds).lower()}")
        return 0 if res.holds else COUNTEREXAMPLE
    if args.which == "f2n-max":
        best, witness = codes_mod.rowspace_distance2_max(
            args.n, use_theorem_cutoff=not args.no_cutoff
        )
        print(f"n={args.n} max_size={best} bound={5 * 2 ** (args.n - 4)}")
        for line in witness.to_lines():
            print(line)
        return 0
    raise ValueError(f"unknown code check {args.which!r}")


def _cmd_enumerate(args) -> int:
    cls = enum_mod.GraphClass.from_token(args.graph_class)
    if args.merge:
        payloads = []
        for path in args.merge:
            with open(path) as fh:
                payloads.append(json.load(fh))
        merged = enum_mod.merge_reports(payloads)
        if merged["rank"] != args.rank or merged["class"] != cls.value:
            raise ValueError("merge inputs disagree with --rank/--class")
        _emit(dumps_report(merged), args.report)
        return 0
    report = enum_mod.enumerate_extremal(
        args.rank,
        cls,
        jobs=args.jobs,
        progress=args.progress,
        shards=args.shards,
        shard_index=args.shard_index,
    )
    _emit(dumps_report(report.to_payload()), args.report)
    return 0


def _cmd_verify(args) -> int:
    result = enum_mod.verify_theorem(
        args.theorem, args.r, jobs=args.jobs, progress=args.progress
    )
    status = "PASS" if result.passed else "FAIL"
    print(f"{status} {result.theorem} r={result.rank}: {result.message}")
    for g6 in result.counterexamples:
        print(f"counterexample: {g6}")
    return 0 if result.passed else COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankforge",
        description="Exact-rank toolkit for reduced triangle-free and bipartite graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="print the order-bound table for a rank")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("construct", help="emit a named construction as graph6")
    p.add_argument("kind", choices=["B", "O", "C", "remark"])
    p.add_argument("--param", type=int, required=True)
    p.add_argument("--recursive", action="store_true",
                   help="use the doubling recursion for C")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("rank", help="exact adjacency rank of graph6 input")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("reduce", help="delete isolated vertices and collapse twins")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("check", help="predicates and independence number")
    p.add_argument("property", choices=["reduced", "trianglefree", "bipartite", "alpha"])
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("lemma", help="rank-drop checks and the subgraph report")
    p.add_argument("which", choices=["neighborhood", "symdiff", "lov"])
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--v", type=int)
    p.add_argument("--u", type=int)
    p.add_argument("--gap", type=int, choices=[1, 2], default=1)
    p.add_argument("--report")
    p.set_defaults(func=_cmd_lemma)

    p = sub.add_parser("code", help="binary-code bound checks")
    p.add_argument("which", choices=["singleton", "plotkin", "f2n", "f2n-max"])
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--d", type=int, help="distance parameter for singleton")
    p.add_argument("--set", help="comma-separated independent set for plotkin")
    p.add_argument("--n", type=int, help="code length for f2n-max")
    p.add_argument("--no-cutoff", action="store_true",
                   help="disable the proven-bound cutoff in f2n-max")
    p.set_defaults(func=_cmd_code)

    p = sub.add_parser("enumerate", help="extremal-order report for a rank and class")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--class", dest="graph_class", required=True)
    p.add_argument("--jobs", type=int, default=os.cpu_count())
    p.add_argument("--report")
    p.add_argument("--progress", action="store_true")
    p.add_argument("--shards", type=int)
    p.add_argument("--shard-index", type=int)
    p.add_argument("--merge", nargs="+", help="merge shard report files instead of running")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="check a headline theorem at desk scale")
    p.add_argument("--theorem", choices=["main", "bi", "bigen", "remark"], required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--jobs", type=int, default=os.cpu_count())
    p.add_argument("--progress", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, IndexError, OSError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())

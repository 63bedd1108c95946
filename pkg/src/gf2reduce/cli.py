"""Command-line front end.  Data goes to stdout, diagnostics to stderr."""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from .gf2 import MatrixFormatError
from .graph import Graph, GraphError, format_graph, from_legal_string, nullity_of, parse_graph
from .parallel import (
    DISTRIBUTIONS,
    format_census,
    parallel_complexity,
    parallel_complexity_census,
)
from .pivot import pivot_graph, retrograph, reverse_reductions
from .poset import format_poset, graph_from_pivotal_poset, parse_poset, reducibility_poset
from .reduction import (
    NotReducibleError,
    apply_strategy,
    applicable_rules,
    format_strategy,
    gnr_count,
    parse_strategy,
    reduce,
    strategy_for,
)


class CliError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str) -> Graph:
    try:
        return parse_graph(_read(path))
    except MatrixFormatError as exc:
        raise CliError(f"{path}: {exc}") from None


def _vertex_list(text: str) -> list[str]:
    return [v for v in text.split(",") if v] if text else []


def to_dot(g: Graph) -> str:
    """Undirected DOT; loops become self-edges."""

    def q(v: str) -> str:
        return '"' + v.replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = ["graph G {"]
    lines += [f"  {q(v)};" for v in g.labels]
    rows = g.adj.packed_rows
    n = len(g)
    for i in range(n):
        for j in range(i, n):
            if (rows[i] >> j) & 1:
                lines.append(f"  {q(g.labels[i])} -- {q(g.labels[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- subcommands ---------------------------------------------------------------


def cmd_reduce(args) -> str:
    return format_graph(reduce(_load_graph(args.graph), _vertex_list(args.vertices)))


def cmd_check(args) -> str:
    g = _load_graph(args.graph)
    w = _vertex_list(args.vertices)
    try:
        k = gnr_count(g, w)
    except NotReducibleError as exc:
        return f"not-reducible witness={exc.witness}\n"
    return f"reducible nullity={k}\n"


def cmd_rules(args) -> str:
    return format_strategy(applicable_rules(_load_graph(args.graph)))


def cmd_strategy(args) -> str:
    return format_strategy(strategy_for(_load_graph(args.graph), _vertex_list(args.vertices)))


def cmd_apply(args) -> str:
    g = _load_graph(args.graph)
    try:
        strategy = parse_strategy(_read(args.strategy))
    except MatrixFormatError as exc:
        raise CliError(f"{args.strategy}: {exc}") from None
    return format_graph(apply_strategy(g, strategy))


def cmd_poset(args) -> str:
    return format_poset(reducibility_poset(_load_graph(args.graph)), level=args.level)


def cmd_from_poset(args) -> str:
    if os.path.exists(args.labels):
        labels = _read(args.labels).split()
    else:
        labels = _vertex_list(args.labels)
    try:
        entries = parse_poset(_read(args.poset))
    except MatrixFormatError as exc:
        raise CliError(f"{args.poset}: {exc}") from None
    r0 = [s for s, lv in entries if lv == 0]
    g = graph_from_pivotal_poset(labels, r0)
    if g is None:
        raise CliError("pivotal poset is not realizable")
    # higher-level lines, when given, must agree with the reconstruction
    full = reducibility_poset(g).levels
    given_levels = {lv for _, lv in entries}
    for s, lv in entries:
        if full.get(s) != lv:
            raise CliError(f"poset entry level {lv} for {{{','.join(sorted(s))}}} disagrees with the reconstructed graph")
    for lv in given_levels:
        want = {s for s, k in full.items() if k == lv}
        if want != {s for s, k in entries if k == lv}:
            raise CliError(f"level {lv} is incomplete for the reconstructed graph")
    return format_graph(g)


def cmd_pivot(args) -> str:
    g = _load_graph(args.graph)
    w = _vertex_list(args.set)
    out = pivot_graph(g, w)
    if out is None:
        raise CliError(f"{{{','.join(w)}}} is not in the pivotal poset (nullity {nullity_of(g, w)})")
    return format_graph(out)


def cmd_retrograph(args) -> str:
    g = _load_graph(args.graph)
    out = retrograph(g)
    if out is None:
        raise CliError(f"graph is singular (nullity {nullity_of(g, g.labels)}); no retrograph")
    return format_graph(out)


def cmd_reverse(args) -> str:
    g = _load_graph(args.graph)
    return "".join(format_graph(h) for h in reverse_reductions(g, _vertex_list(args.add)))


def cmd_parallel(args) -> str:
    return f"pc={parallel_complexity(_load_graph(args.graph), cap=args.cap)}\n"


def cmd_parallel_census(args) -> str:
    report = parallel_complexity_census(
        args.n, args.sample, args.seed, distribution=args.distribution, cap=args.cap
    )
    return format_census(report)


def cmd_from_string(args) -> str:
    return format_graph(from_legal_string(_read(args.file)))


def cmd_dot(args) -> str:
    return to_dot(_load_graph(args.graph))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gf2reduce", description="Graph reductions over GF(2).")
    parser.add_argument("-o", "--output", help="write data here instead of stdout")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("reduce", cmd_reduce, "reduce a graph along a vertex set")
    p.add_argument("graph")
    p.add_argument("--vertices", required=True)
    p = add("check", cmd_check, "test reducibility and report the nullity")
    p.add_argument("graph")
    p.add_argument("--vertices", required=True)
    p = add("rules", cmd_rules, "list applicable rules")
    p.add_argument("graph")
    p = add("strategy", cmd_strategy, "print a strategy removing a vertex set")
    p.add_argument("graph")
    p.add_argument("--vertices", required=True)
    p = add("apply", cmd_apply, "apply a strategy file")
    p.add_argument("graph")
    p.add_argument("strategy")
    p = add("poset", cmd_poset, "print the reducibility poset")
    p.add_argument("graph")
    p.add_argument("--level", type=int)
    p = add("from-poset", cmd_from_poset, "reconstruct a graph from its pivotal poset")
    p.add_argument("labels", help="comma-separated labels or a file of labels")
    p.add_argument("poset")
    p = add("pivot", cmd_pivot, "pivot a graph by a vertex set")
    p.add_argument("graph")
    p.add_argument("--set", required=True)
    p = add("retrograph", cmd_retrograph, "print the retrograph")
    p.add_argument("graph")
    p = add("reverse", cmd_reverse, "list graphs that reduce to this one")
    p.add_argument("graph")
    p.add_argument("--add", required=True)
    p = add("parallel", cmd_parallel, "exact parallel complexity")
    p.add_argument("graph")
    p.add_argument("--cap", type=int, default=10)
    p = add("parallel-census", cmd_parallel_census, "parallel complexity over random graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sample", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--distribution", choices=sorted(DISTRIBUTIONS), default="uniform")
    p.add_argument("--cap", type=int, default=10)
    p = add("from-string", cmd_from_string, "graph of a legal string")
    p.add_argument("file")
    p = add("dot", cmd_dot, "export DOT")
    p.add_argument("graph")
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.func(args)
    except (CliError, GraphError, ValueError) as exc:
        print(f"gf2reduce {args.command}: {exc}", file=stderr)
        return 1
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

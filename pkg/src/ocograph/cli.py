"""Command-line front end.

Exit codes: 0 success or affirmative verdict, 1 negative verdict,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass

from . import algorithms, oracle
from .check import format_table, run_check
from .cotree import (
    CoExpr,
    CoTreeError,
    canonicalize,
    evaluate,
    parse_named,
    random_canonical,
    serialize,
)
from .digraph import Digraph, is_oriented
from .recognition import recognize

EXIT_OK, EXIT_NO, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class InputDocument:
    source: str  # "edges", "expression-file" or "expression"
    graph: Digraph
    tree: CoExpr | None
    names: list[str]

    def __post_init__(self) -> None:
        if len(self.names) != self.graph.n or len(set(self.names)) != len(self.names):
            raise InputError("vertex names must be unique and cover every vertex")


_HEADER = re.compile(r"^\s*(\d+)\s+(\d+)\s*$")
_NAME = re.compile(r"^[A-Za-z0-9_]+$")


def _content_lines(text: str) -> list[tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def parse_edge_list(text: str) -> tuple[Digraph, list[str]]:
    """Parse the ``n m`` header format.

    ``m`` arc lines ``u v`` follow the header; any further lines hold a
    single name each and declare isolated vertices.  Names get dense ids in
    first-appearance order.
    """
    lines = _content_lines(text)
    if not lines:
        raise InputError("empty input")
    number, header = lines[0]
    match = _HEADER.match(header)
    if not match:
        raise InputError(f"line {number}: expected header 'n m'")
    n, m = int(match.group(1)), int(match.group(2))
    ids: dict[str, int] = {}

    def vertex(name: str, line_no: int) -> int:
        if not _NAME.match(name):
            raise InputError(f"line {line_no}: bad vertex name {name!r}")
        if name not in ids:
            ids[name] = len(ids)
        return ids[name]

    body = lines[1:]
    if len(body) < m:
        raise InputError(f"line {number}: header promises {m} arcs, found {len(body)} lines")
    arcs = set()
    for line_no, line in body[:m]:
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {line_no}: expected 'u v'")
        u, v = vertex(parts[0], line_no), vertex(parts[1], line_no)
        if u == v:
            raise InputError(f"line {line_no}: self-loop on {parts[0]}")
        if (u, v) in arcs:
            raise InputError(f"line {line_no}: duplicate arc {parts[0]} {parts[1]}")
        arcs.add((u, v))
    for line_no, line in body[m:]:
        parts = line.split()
        if len(parts) != 1:
            raise InputError(f"line {line_no}: expected a single isolated vertex name")
        if parts[0] in ids:
            raise InputError(f"line {line_no}: vertex {parts[0]} declared twice")
        vertex(parts[0], line_no)
    if len(ids) != n:
        raise InputError(f"line {number}: header says {n} vertices, found {len(ids)}")
    names = sorted(ids, key=ids.__getitem__)
    return Digraph(n, arcs), names


def format_edge_list(g: Digraph, names: list[str]) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{names[u]} {names[v]}" for u, v in sorted(g.arcs))
    touched = {v for arc in g.arcs for v in arc}
    lines.extend(names[v] for v in range(g.n) if v not in touched)
    return "\n".join(lines) + "\n"


def _from_expression(text: str, source: str) -> InputDocument:
    try:
        tree, names = parse_named(text)
    except CoTreeError as exc:
        raise InputError(str(exc)) from exc
    return InputDocument(source, evaluate(tree), tree, names)


def load_input(arg: str, fmt: str = "auto") -> InputDocument:
    """Resolve a CLI argument: an edge-list file, an expression file or inline text."""
    if fmt != "expr" and (arg == "-" or os.path.isfile(arg)):
        try:
            text = sys.stdin.read() if arg == "-" else open(arg, encoding="utf-8").read()
        except OSError as exc:
            raise InputError(str(exc)) from exc
        lines = _content_lines(text)
        if not lines:
            raise InputError(f"{arg}: empty input")
        if fmt == "edges" or (fmt == "auto" and _HEADER.match(lines[0][1])):
            try:
                g, names = parse_edge_list(text)
            except InputError as exc:
                raise InputError(f"{arg}: {exc}") from exc
            return InputDocument("edges", g, None, names)
        return _from_expression(" ".join(line for _, line in lines), "expression-file")
    if fmt == "edges":
        raise InputError(f"{arg}: no such file")
    return _from_expression(arg, "expression")


def _tree_of(doc: InputDocument) -> tuple[CoExpr | None, object]:
    """Canonical tree for the document, or ``(None, witness)``."""
    if doc.tree is not None:
        return canonicalize(doc.tree), None
    outcome = recognize(doc.graph)
    return outcome.tree, outcome.witness


def _witness_text(witness, names: list[str]) -> str:
    return f"witness {witness.pattern}: " + ",".join(names[v] for v in witness.vertices)


def _witness_json(witness, names: list[str]) -> dict:
    return {"pattern": witness.pattern, "vertices": [names[v] for v in witness.vertices]}


class _Reporter:
    def __init__(self, command: str, as_json: bool):
        self.command = command
        self.as_json = as_json
        self.record: dict = {"command": command}

    def line(self, text: str) -> None:
        if not self.as_json:
            print(text)

    def finish(self, status: int, **fields) -> int:
        if self.as_json:
            self.record.update(fields)
            print(json.dumps(self.record, sort_keys=True))
        return status


def cmd_recognize(args) -> int:
    doc = load_input(args.input, args.format)
    out = _Reporter("recognize", args.json)
    tree, witness = _tree_of(doc)
    if tree is None:
        out.line(_witness_text(witness, doc.names))
        return out.finish(EXIT_NO, verdict="not-oriented-cograph",
                          witness=_witness_json(witness, doc.names))
    expr = serialize(tree, doc.names)
    out.line(expr)
    return out.finish(EXIT_OK, verdict="oriented-cograph", expression=expr)


def _budget(args) -> oracle.OracleBudget:
    return oracle.OracleBudget(max_vertices=args.budget)


def cmd_color(args) -> int:
    doc = load_input(args.input, args.format)
    out = _Reporter("color", args.json)
    tree, witness = _tree_of(doc)
    numbers: dict = {}
    fields: dict = {}
    if tree is None:
        if not args.oracle:
            raise InputError(
                "input is not an oriented co-graph "
                f"({_witness_text(witness, doc.names)}); use --oracle for brute force"
            )
        if not is_oriented(doc.graph):
            raise InputError("input is not an oriented graph")
        colors = oracle.brute_coloring(doc.graph, _budget(args))
        k = max(colors.values(), default=0)
        numbers["chi_o"] = k
        numbers["oracle_chi_o"] = k
        out.line(f"chi_o = {k} (oracle)")
        fields["witness"] = _witness_json(witness, doc.names)
    else:
        coloring, _ = algorithms.label_coloring(tree)
        colors, k = coloring.colors, coloring.k
        numbers["chi_o"] = k
        out.line(f"chi_o = {k}")
        if args.oracle:
            expected = oracle.brute_chromatic(doc.graph, _budget(args))
            numbers["oracle_chi_o"] = expected
            agree = expected == k
            fields["oracle_agrees"] = agree
            out.line(f"oracle chi_o = {expected} ({'agree' if agree else 'DISAGREE'})")
    assignment = {doc.names[v]: colors[v] for v in range(doc.graph.n)}
    if args.assignment:
        for v in range(doc.graph.n):
            out.line(f"{doc.names[v]} {colors[v]}")
        fields["assignment"] = assignment
    status = EXIT_OK
    if args.verify:
        ok = algorithms.verify_oriented_coloring(doc.graph, colors)
        fields["verified"] = ok
        out.line(f"verify: {'pass' if ok else 'fail'}")
        status = EXIT_OK if ok else EXIT_NO
    if fields.get("oracle_agrees") is False:
        status = EXIT_NO
    return out.finish(status, verdict="colored", numbers=numbers, **fields)


def _require_tree(doc: InputDocument) -> CoExpr:
    tree, witness = _tree_of(doc)
    if tree is None:
        raise InputError(f"input is not an oriented co-graph ({_witness_text(witness, doc.names)})")
    return tree


def cmd_longest_path(args) -> int:
    doc = load_input(args.input, args.format)
    out = _Reporter("longest-path", args.json)
    ell = algorithms.longest_path_length(_require_tree(doc))
    out.line(str(ell))
    return out.finish(EXIT_OK, verdict="computed", numbers={"longest_path": ell})


def cmd_isomorphic(args) -> int:
    d1 = load_input(args.first, args.format)
    d2 = load_input(args.second, args.format)
    out = _Reporter("isomorphic", args.json)
    same = algorithms.cotree_isomorphic(_require_tree(d1), _require_tree(d2))
    out.line("yes" if same else "no")
    return out.finish(EXIT_OK if same else EXIT_NO, verdict="isomorphic" if same else "not-isomorphic")


def cmd_oriented_clique(args) -> int:
    doc = load_input(args.input, args.format)
    out = _Reporter("oriented-clique", args.json)
    yes = algorithms.is_oriented_clique(_require_tree(doc))
    out.line("yes" if yes else "no")
    return out.finish(EXIT_OK if yes else EXIT_NO, verdict="oriented-clique" if yes else "not-oriented-clique")


def cmd_hom(args) -> int:
    doc = load_input(args.input, args.format)
    out = _Reporter("hom", args.json)
    if not is_oriented(doc.graph):
        raise InputError("input is not an oriented graph")
    h = algorithms.hom_to_transitive_tournament(doc.graph, args.k)
    if h is None:
        out.line("none")
        return out.finish(EXIT_NO, verdict="none", numbers={"k": args.k})
    mapping = {doc.names[v]: h[v] for v in range(doc.graph.n)}
    for v in range(doc.graph.n):
        out.line(f"{doc.names[v]} {h[v]}")
    return out.finish(EXIT_OK, verdict="found", numbers={"k": args.k}, assignment=mapping)


def cmd_generate(args) -> int:
    if args.n < 1:
        raise InputError("--n must be at least 1")
    tree = random_canonical(args.n, args.seed)
    names = [f"v{i}" for i in range(args.n)]
    if args.edges:
        sys.stdout.write(format_edge_list(evaluate(tree), names))
        return EXIT_OK
    expr = serialize(tree, names)
    out = _Reporter("generate", args.json)
    out.line(expr)
    return out.finish(EXIT_OK, verdict="generated", expression=expr,
                      numbers={"n": args.n, "seed": args.seed})


def cmd_check(args) -> int:
    seeds = tuple(args.seeds) if args.seeds else (args.seed,)
    results = run_check(args.n_max, seeds, _budget(args), cases=args.cases)
    ok = all(r.passed for r in results)
    if args.json:
        print(json.dumps({
            "command": "check",
            "verdict": "pass" if ok else "fail",
            "properties": [
                {"name": r.name, "cases": r.cases, "failures": r.failures,
                 "first_failure": r.first_failure}
                for r in results
            ],
        }, sort_keys=True))
    else:
        print(format_table(results))
    return EXIT_OK if ok else EXIT_NO


def cmd_scaling(args) -> int:
    from .report import growth_ratios, measure_scaling, plot_scaling, write_csv

    rows = measure_scaling(args.sizes, seed=args.seed, memory=not args.no_memory,
                           repeats=args.repeats)
    write_csv(rows, sys.stdout)
    if args.plot:
        plot_scaling(rows, args.plot)
        print(f"# figure written to {args.plot}", file=sys.stderr)
    worst = max((r for ratios in growth_ratios(rows).values() for r in ratios), default=0.0)
    print(f"# worst successive time ratio: {worst:.2f}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ocograph",
        description="Oriented co-graphs: recognition, coloring, paths and isomorphism.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, budget=False, seed=False):
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        p.add_argument("--format", choices=("auto", "edges", "expr"), default="auto",
                       help="how to read inputs (default: detect)")
        if budget:
            p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET.max_vertices,
                           help="max vertices for brute-force oracles")
        if seed:
            p.add_argument("--seed", type=int, default=1)

    p = sub.add_parser("recognize", help="decide membership; print tree or witness")
    p.add_argument("input", help="edge-list file, expression file, '-' or an expression")
    common(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("color", help="optimal oriented coloring")
    p.add_argument("input")
    p.add_argument("--assignment", action="store_true", help="print 'name color' lines")
    p.add_argument("--verify", action="store_true", help="re-check the coloring")
    p.add_argument("--oracle", action="store_true", help="cross-check by brute force")
    common(p, budget=True)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("longest-path", help="arcs on a longest oriented path")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_longest_path)

    p = sub.add_parser("isomorphic", help="isomorphism of two oriented co-graphs")
    p.add_argument("first")
    p.add_argument("second")
    common(p)
    p.set_defaults(func=cmd_isomorphic)

    p = sub.add_parser("oriented-clique", help="is the input a transitive tournament")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_oriented_clique)

    p = sub.add_parser("hom", help="homomorphism into the transitive tournament on k vertices")
    p.add_argument("input")
    p.add_argument("k", type=int)
    common(p)
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("generate", help="random canonical oriented co-graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--edges", action="store_true", help="write an edge list instead")
    common(p, seed=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("check", help="cross-validate fast algorithms against oracles")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--seeds", type=int, nargs="+")
    p.add_argument("--cases", type=int, default=200, help="cases per property and seed")
    common(p, budget=True, seed=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scaling", help="time the tree algorithms; CSV to stdout")
    p.add_argument("--sizes", type=int, nargs="+", default=[10_000, 100_000, 1_000_000])
    p.add_argument("--plot", metavar="PATH", help="also render a figure to PATH")
    p.add_argument("--no-memory", action="store_true", help="skip tracemalloc runs")
    p.add_argument("--repeats", type=int, default=1, help="report the best of N timings")
    common(p, seed=True)
    p.set_defaults(func=cmd_scaling)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, CoTreeError, ValueError, oracle.BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``periodic-colouring {analyze,colour,verify,survey,generate,oracle}``.

Exit codes: 0 ok, 1 predicate or verification failure, 2 input error,
3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import chroma, oracles
from .families import FamilyError, generate, parse_family
from .graph_core import Graph, GraphError, parse_edge_list
from .oriented import (
    CircularPartition,
    PartitionError,
    infeasibility_reason,
    is_circularly_k_partite,
    verify_partition,
)
from .report import analyze, to_dot
from .theorems import (
    DEFAULT_FAMILIES,
    PREDICATE_NAMES,
    build_corpus,
    expand_shorthand,
    random_specs,
    survey,
)
from .vertex import (
    VertexColouring,
    build_t_periodic_colouring,
    verify_t_periodic,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def load_graph(source: str) -> Graph:
    """Edge-list file path, or a family shorthand such as ``cycle:6``."""
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    if ":" in source:
        return generate(parse_family(source))[0]
    raise InputError(f"{source!r} is neither a file nor a family shorthand")


def parse_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return [int(lo)]
        return list(range(int(lo), int(hi) + 1))
    except ValueError:
        raise InputError(f"bad range {text!r}; expected A..B or a single integer") from None


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _graph_record(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def cmd_analyze(args) -> int:
    g = load_graph(args.input)
    ts = parse_range(args.t) if args.t else list(range(1, min(g.n, 6) + 1))
    for t in ts:
        if not 1 <= t <= g.n:
            raise InputError(f"t={t} outside 1..{g.n}")
    report = analyze(g, ts)
    if args.format == "json":
        text = report.to_json()
    elif args.format == "dot":
        colouring = VertexColouring(ts[0], report.chi_t[0].k, report.chi_t[0].colours) if ts else None
        text = to_dot(g, CircularPartition.from_record(report.witness), colouring)
    else:
        text = report.to_text()
    _emit(text, args.out)
    return EXIT_OK


def cmd_colour(args) -> int:
    g = load_graph(args.input)
    if (args.circular is None) == (args.periodic is None):
        raise InputError("give exactly one of --circular K or --periodic T")
    if args.circular is not None:
        if args.circular < 1:
            raise InputError("--circular needs K >= 1")
        p = is_circularly_k_partite(g, args.circular)
        if p is None:
            print(f"error: not circularly {args.circular}-partite: "
                  f"{infeasibility_reason(g, args.circular)}", file=sys.stderr)
            return EXIT_FAIL
        record = {"kind": "circular", **p.to_record(), "graph": _graph_record(g)}
        if args.format == "dot":
            text = to_dot(g, partition=p)
        elif args.format == "text":
            text = "".join(f"{v} {w} {c}\n" for v, w, c in record["entries"])
        else:
            text = json.dumps(record) + "\n"
    else:
        t = args.periodic
        if not 1 <= t <= g.n:
            raise InputError(f"--periodic needs 1 <= T <= n = {g.n}")
        col = build_t_periodic_colouring(g, t)
        record = {"kind": "periodic", **col.to_record(), "graph": _graph_record(g)}
        if args.format == "dot":
            text = to_dot(g, colouring=col)
        elif args.format == "text":
            text = " ".join(map(str, col.colour_of)) + "\n"
        else:
            text = json.dumps(record) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = load_graph(args.input)
    try:
        with open(args.witness, encoding="utf-8") as fh:
            record = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read witness: {exc}") from None
    graph = record.get("graph")
    if graph is not None and (graph.get("n") != g.n or graph.get("edges") != [list(e) for e in g.edges()]):
        print("error: witness was produced for a different graph", file=sys.stderr)
        return EXIT_INPUT
    kind = record.get("kind", "periodic" if "colours" in record else "circular")
    try:
        if kind == "circular":
            problems = [v.describe() for v in verify_partition(g, CircularPartition.from_record(record))]
        else:
            col = VertexColouring.from_record(record)
            if len(col.colour_of) != g.n:
                raise PartitionError(f"colouring has {len(col.colour_of)} entries, graph has {g.n} vertices")
            problems = [
                f"path {' '.join(map(str, p))} joins colours {col.colour_of[p[0]]} and {col.colour_of[p[-1]]}"
                for p in verify_t_periodic(g, col.t, col)
            ]
    except (PartitionError, KeyError, TypeError, ValueError) as exc:
        print(f"error: witness does not match the graph: {exc}", file=sys.stderr)
        return EXIT_INPUT
    for line in problems:
        print(line)
    if problems:
        print(f"{len(problems)} violation(s)")
        return EXIT_FAIL
    print("ok")
    return EXIT_OK


def cmd_survey(args) -> int:
    specs = []
    families = args.families if args.families else ([] if args.random else DEFAULT_FAMILIES)
    for f in families:
        specs.extend(expand_shorthand(f))
    if args.random:
        lo, hi = parse_range(args.n)[0], parse_range(args.n)[-1]
        specs.extend(random_specs(args.random, lo, hi, args.seed))
    names = args.predicates.split(",") if args.predicates else None
    if names:
        unknown = sorted(set(names) - set(PREDICATE_NAMES))
        if unknown:
            raise InputError(f"unknown predicate(s): {', '.join(unknown)}")
    corpus = build_corpus(specs)
    tallies = survey(corpus, names)
    by_label = dict(corpus)
    lines = [f"corpus {len(corpus)} graphs, seed {args.seed}"]
    dumped = []
    failed = False
    for tally in tallies:
        status = "pass" if not tally.failures else "FAIL"
        failed |= bool(tally.failures)
        lines.append(f"{tally.name:<20s} {tally.passed}/{tally.qualifying} {status}  ({tally.statement})")
        for i, (label, msg) in enumerate(tally.failures):
            path = os.path.join(args.out, f"{tally.name}-{i:03d}.txt")
            dumped.append((path, label))
            lines.append(f"    {label}: {msg} -> {path}")
    if dumped:
        os.makedirs(args.out, exist_ok=True)
        for path, label in dumped:
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(f"# {label}\n" + by_label[label].to_edge_list())
    if args.format == "json":
        text = json.dumps(
            {
                "corpus_size": len(corpus),
                "seed": args.seed,
                "predicates": [
                    {
                        "name": t.name,
                        "statement": t.statement,
                        "qualifying": t.qualifying,
                        "passed": t.passed,
                        "failures": [{"graph": lab, "message": msg} for lab, msg in t.failures],
                    }
                    for t in tallies
                ],
            },
            indent=2,
        ) + "\n"
    else:
        text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_generate(args) -> int:
    spec = parse_family(args.family)
    g, expected = generate(spec)
    header = [f"# {spec.shorthand()}: n={g.n} m={g.m}"]
    if expected.chi_o is not None:
        header.append(f"# chi_o = {expected.chi_o}")
    if expected.chi_o_divisible_by is not None:
        header.append(f"# chi_o divisible by {expected.chi_o_divisible_by}")
    if expected.chi_t_formula is not None:
        header.append(f"# chi_t = {expected.chi_t_formula}")
    _emit("\n".join(header) + "\n" + g.to_edge_list(), args.out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = load_graph(args.input)
    print(f"oracle chi_o = {oracles.oracle_chi_o(g)}")
    ts = parse_range(args.t) if args.t else list(range(1, g.n))
    for t in ts:
        print(f"oracle chi_{t} = {oracles.oracle_chi_t(g, t)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="periodic-colouring",
        description="Periodic colouring numbers of simple connected graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report chi_o, chi_t, chi, chi* and theorem checks")
    p.add_argument("input", help="edge-list file or family shorthand (e.g. cycle:6, petal:3x4)")
    p.add_argument("--t", help="t range A..B (default 1..min(n,6))")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("colour", aliases=["color"], help="emit a circular partition or t-periodic colouring")
    p.add_argument("input")
    p.add_argument("--circular", type=int, metavar="K")
    p.add_argument("--periodic", type=int, metavar="T")
    p.add_argument("--format", choices=["json", "text", "dot"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_colour)

    p = sub.add_parser("verify", help="check a witness produced by 'colour'")
    p.add_argument("input")
    p.add_argument("witness")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("survey", help="evaluate theorem predicates over a corpus")
    p.add_argument("families", nargs="*", help="family shorthands; N..M expands a single parameter")
    p.add_argument("--random", type=int, default=0, metavar="COUNT")
    p.add_argument("--n", default="4..8", help="vertex-count range for random graphs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--predicates", help="comma-separated subset of: " + ", ".join(PREDICATE_NAMES))
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", default="counterexamples", help="directory for counterexample edge lists")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("generate", help="print a family member as an edge list")
    p.add_argument("family")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("oracle", help="brute-force chi_o and chi_t on a small graph")
    p.add_argument("input")
    p.add_argument("--t")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (chroma.CapExceeded, oracles.OracleCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, GraphError, FamilyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

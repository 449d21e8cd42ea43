"""Command-line surface: decide instances, classify pattern sets, reproduce
the reference tables, build hardness gadgets, and run the differential
self-test."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from .csp import PolymorphismReport, build_template
from .engine import EngineError, classify_pattern_set, decide
from .graphs import Graph, GraphError, UnsupportedSizeError, parse_graph6, write_graph6
from .hardness import FormulaError, build_gadget, parse_formula, verify_reduction
from .oracle import verify_colouring
from .patterns import PatternError, PatternSet, parse_pattern_set
from .suites import (
    curated_pattern_sets,
    graphs_up_to,
    run_csp_correspondence,
    run_engine_vs_oracle,
    run_recognizer_vs_oracle,
)
from .tables import check_table

EXIT_OK = 0
EXIT_NO = 1
EXIT_ERROR = 2


def _style(text: str, code: str) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\x1b[{code}m{text}\x1b[0m"


def _load_patterns(source: str) -> PatternSet:
    path = Path(source)
    if path.exists() and path.is_file():
        return parse_pattern_set(path.read_text())
    return parse_pattern_set(source)


def _load_graphs(source: str) -> list[Graph]:
    if source == "-":
        text = sys.stdin.read()
    else:
        text = Path(source).read_text()
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            graphs.append(parse_graph6(line))
        except GraphError as exc:
            raise GraphError(f"line {lineno}: {exc}") from exc
    if not graphs:
        raise GraphError("no graphs found in input")
    return graphs


def cmd_decide(args: argparse.Namespace) -> int:
    f = _load_patterns(args.patterns)
    graphs = _load_graphs(args.graph)
    records = []
    any_no = False
    for g in graphs:
        verdict = decide(g, f, engine=args.engine)
        if verdict.admits:
            witness = verdict.witness.colour_string()
            if args.check and not verify_colouring(g, verdict.witness.colouring, f):
                raise AssertionError("witness failed the --check re-verification")
            records.append(
                {"graph": write_graph6(g).decode(), "admits": True,
                 "witness": witness, "engine": verdict.engine_used}
            )
        else:
            any_no = True
            records.append(
                {"graph": write_graph6(g).decode(), "admits": False,
                 "witness": None, "engine": verdict.engine_used}
            )
    if args.format == "json":
        print(json.dumps(records, indent=2))
    else:
        for rec in records:
            print(f"yes {rec['witness']}" if rec["admits"] else "no")
    if len(graphs) == 1 and any_no:
        return EXIT_NO
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    f = _load_patterns(args.patterns)
    cls = classify_pattern_set(f)
    payload = cls.to_json_dict()
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"pattern set : {' '.join(f.names())}")
        print(f"engine      : {payload['engine']}")
        print(f"trivial     : {payload['trivial'] or '-'}")
        print(f"universal   : {payload['universal']}")
        print(f"finite      : {payload['finite']}")
        ops = [k for k, v in payload["polymorphisms"].items() if v]
        print(f"operations  : {', '.join(ops) if ops else 'none'}")
        print(f"class       : {payload['structural_class'] or '-'}")
        if payload["hardness_note"]:
            print(f"note        : {payload['hardness_note']}")
    return EXIT_OK


def cmd_polymorphisms(args: argparse.Namespace) -> int:
    f = _load_patterns(args.patterns)
    template = build_template(f)
    report = PolymorphismReport.of(template)
    payload = {
        "polymorphisms": report.as_dict(),
        "template": template.to_json_dict(),
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        ops = report.names()
        print(f"operations: {', '.join(ops) if ops else 'none'}")
        for rel in payload["template"]["relations"]:
            print(f"  {rel['name']} (arity {rel['arity']}): "
                  f"{' '.join(rel['tuples']) or '(empty)'}")
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    chk = check_table(args.which)
    print(chk.render())
    verdict = "PASS" if chk.ok else "FAIL"
    print(_style(verdict, "32" if chk.ok else "31"))
    return EXIT_OK if chk.ok else EXIT_NO


def cmd_gadget(args: argparse.Namespace) -> int:
    phi = parse_formula(Path(args.cnf).read_text())
    gg = build_gadget(phi)
    payload = {
        "graph6": write_graph6(gg.graph).decode(),
        "order": gg.graph.n,
        "edges": gg.graph.edge_count(),
        "occurrence_edges": gg.occurrence_edge_indices(),
    }
    if args.format == "json":
        out = dict(payload)
    else:
        print(payload["graph6"])
        print(json.dumps({"occurrence_edges": payload["occurrence_edges"]}))
        out = None
    status = EXIT_OK
    if args.verify:
        try:
            equivalent = verify_reduction(phi)
            message = "verified: equivalent" if equivalent else "MISMATCH"
            status = EXIT_OK if equivalent else EXIT_NO
        except UnsupportedSizeError as exc:
            message = f"verification skipped: {exc}"
            status = EXIT_NO
        if out is not None:
            out["verify"] = message
        else:
            print(message)
    if out is not None:
        print(json.dumps(out, indent=2))
    return status


def cmd_selftest(args: argparse.Namespace) -> int:
    if not 3 <= args.max_n <= 7:
        raise GraphError(f"--max-n must be between 3 and 7, got {args.max_n}")
    rng = random.Random(args.seed)
    sweep_n = min(args.max_n, 6)
    results = [
        run_engine_vs_oracle(sweep_n),
        run_recognizer_vs_oracle(sweep_n),
        run_csp_correspondence(sweep_n),
        _gadget_suite(),
    ]
    if args.max_n >= 7:
        results.append(_sampled_order7_suite(rng))
    ok = True
    for res in results:
        print(res.summary())
        for failure in res.failures[:20]:
            print(f"    {failure}")
        ok = ok and res.ok
    print(_style("selftest PASS" if ok else "selftest FAIL", "32" if ok else "31"))
    return EXIT_OK if ok else EXIT_NO


def _gadget_suite():
    from .hardness import OneInThreeFormula
    from .suites import SuiteResult

    result = SuiteResult("gadget-round-trip")
    formulas = [
        OneInThreeFormula(3, ((1, 2, 3),)),
        OneInThreeFormula(5, ((1, 2, 3), (1, 4, 5))),
        OneInThreeFormula(2, ((1, 1, 2),)),
        OneInThreeFormula(1, ((1, 1, 1),)),
        OneInThreeFormula(4, ((1, 2, 3), (2, 3, 4), (1, 3, 4))),
    ]
    for phi in formulas:
        for red_true in (False, True):
            result.checked += 1
            if not verify_reduction(phi, red_true=red_true):
                result.failures.append(f"{phi} red_true={red_true}")
    return result


def _sampled_order7_suite(rng: random.Random):
    from .graphs import enumerate_nonisomorphic_graphs
    from .oracle import admits_colouring
    from .suites import SuiteResult

    result = SuiteResult("engine-vs-oracle-n7-sample")
    graphs = list(enumerate_nonisomorphic_graphs(7))
    sample = rng.sample(graphs, 60)
    sets = rng.sample(curated_pattern_sets(), 10)
    for f in sets:
        for g in sample:
            want = admits_colouring(g, f) is not None
            verdict = decide(g, f)
            result.checked += 1
            if verdict.admits != want:
                result.failures.append(f"{f!r} on {write_graph6(g).decode()}")
    return result


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="patternfree",
        description="Decide and classify forbidden-pattern 2-edge-colouring "
                    "problems on small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide instances from graph6 input")
    p.add_argument("--patterns", required=True, help="pattern-set file or inline text")
    p.add_argument("--graph", required=True, help="graph6 file, or - for stdin")
    p.add_argument("--engine", default="auto",
                   choices=["auto", "oracle", "2sat", "gf2", "horn",
                            "consistency", "structural", "bruteforce",
                            "trivial", "monochromatic", "multipartite-direct"])
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.add_argument("--check", action="store_true",
                   help="re-verify every returned witness")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("classify", help="classify a pattern set")
    p.add_argument("--patterns", required=True)
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("polymorphisms",
                       help="operations preserving the boolean template")
    p.add_argument("--patterns", required=True)
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(func=cmd_polymorphisms)

    p = sub.add_parser("table", help="recompute a reference table and diff it")
    p.add_argument("which",
                   choices=["preserveP3", "preserveK3", "landscape", "two-edge"])
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("gadget", help="build the 1-in-3 hardness gadget")
    p.add_argument("--cnf", required=True, help="formula file (p 1in3 header)")
    p.add_argument("--verify", action="store_true",
                   help="check the reduction round-trip (desk-scale guard)")
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(func=cmd_gadget)

    p = sub.add_parser("selftest", help="run the differential suites")
    p.add_argument("--max-n", type=int, default=5, dest="max_n")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, PatternError, FormulaError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (EngineError, UnsupportedSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

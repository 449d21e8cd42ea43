"""Differential test suites shared by the CLI self-test and the test suite:
curated pattern sets covering every complexity-landscape row, and sweep
runners comparing engines, recognizers, and the CSP reduction to the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .csp import build_instance, build_template, solve_bruteforce_csp
from .engine import decide
from .graphs import Graph, enumerate_nonisomorphic_graphs, write_graph6
from .oracle import admits_colouring
from .patterns import PatternSet, named, swap_colours
from .recognizers import recognize, registered_expressing_sets


def curated_pattern_sets() -> list[PatternSet]:
    """Pattern sets covering every dispatch row and every landscape class."""
    sets = [
        # trivial rows
        named("rCoP3", "bCoP3"),
        named("3K1"),
        named("rP3", "bP3", "rbP3"),
        named("3K1", "rCoP3", "bCoP3"),
        named("rCoP3", "bCoP3", "rP3", "bP3", "rbP3"),
        named("3K1", "rP3", "bP3", "rbP3"),
        named("3K1", "rCoP3", "bCoP3", "rP3", "bP3", "rbP3"),
        named("rP3", "rbP3"),
        named("3K1", "rP3"),
        # universally colourable
        named("rCoP3"),
        named("rK3"),
        named("rrbK3"),
        # complete-multipartite rows
        named("rCoP3", "bCoP3", "rP3", "bP3"),
        named("rCoP3", "bCoP3", "rK3", "bK3"),
        named("rCoP3", "bCoP3", "rP3", "bK3"),
        named("rCoP3", "bCoP3", "rbP3", "rK3"),
        # finite classes
        named("3K1", "rK3", "bK3"),
        named("3K1", "rK3", "bK3", "rP3"),
        # structural classes (the landscape and the two-edge catalogue)
        named("rP3", "bP3"),
        named("rP3", "bP3", "rrbK3", "rbbK3"),
        named("rP3", "bP3", "bK3", "rrbK3", "rbbK3"),
        named("rP3", "bP3", "rK3", "rrbK3", "rbbK3"),
        named("rP3", "bP3", "bK3", "rbbK3"),
        named("rP3", "bP3", "rK3", "rrbK3"),
        named("rP3", "bP3", "rK3", "bK3", "rrbK3", "rbbK3"),
        named("rP3", "bP3", "rK3", "bK3"),
        named("rP3", "bP3", "rK3", "bK3", "rbbK3"),
        named("rP3", "bP3", "rK3", "bK3", "rrbK3"),
        named("3K1", "rP3", "bP3"),
        named("3K1", "rP3", "bP3", "rK3", "rbbK3"),
        named("bCoP3", "rP3"),
        named("3K1", "bCoP3", "rP3"),
        named("bCoP3", "rP3", "rbP3"),
        named("3K1", "bCoP3", "rP3", "rbP3"),
        named("bCoP3", "rP3", "bP3"),
        # consistency rows
        named("rCoP3", "bP3", "bK3"),
        named("bCoP3", "rP3", "rK3", "rrbK3"),
        named("rCoP3", "bK3"),
        # 2-SAT rows
        named("bP3", "rK3", "rrbK3"),
        named("rbP3", "rK3", "rrbK3"),
        # linear algebra rows
        named("rP3", "bP3", "bK3"),
        named("rP3", "bP3", "rK3"),
        named("rP3", "bP3", "rK3", "rbbK3"),
        named("rbP3", "rK3", "rbbK3"),
        # Horn rows
        named("rK3", "rbP3", "bP3"),
        named("bK3", "rbP3", "rP3"),
        # NP-complete rows and structurally-poly stragglers
        named("rK3", "bK3"),
        named("rK3", "bK3", "rbbK3"),
        named("rK3", "bK3", "rrbK3"),
        named("rP3", "bP3", "rrbK3"),
        named("rP3", "bP3", "rbbK3"),
        named("rP3", "bK3"),
    ]
    return sets


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "pass" if self.ok else "FAIL"
        line = f"{self.name}: {status} ({self.checked} checks"
        if self.failures:
            line += f", {len(self.failures)} failures"
        return line + ")"


def graphs_up_to(max_n: int) -> list[Graph]:
    return [g for n in range(max_n + 1) for g in enumerate_nonisomorphic_graphs(n)]


def run_engine_vs_oracle(
    max_n: int, sets: list[PatternSet] | None = None
) -> SuiteResult:
    result = SuiteResult("engine-vs-oracle")
    graphs = graphs_up_to(max_n)
    for f in sets or curated_pattern_sets():
        for g in graphs:
            want = admits_colouring(g, f) is not None
            verdict = decide(g, f)
            result.checked += 1
            if verdict.admits != want:
                result.failures.append(
                    f"{f!r} on {write_graph6(g).decode()}: "
                    f"engine={verdict.admits} oracle={want}"
                )
    return result


def run_recognizer_vs_oracle(max_n: int) -> SuiteResult:
    result = SuiteResult("recognizer-vs-oracle")
    graphs = graphs_up_to(max_n)
    for f, class_id in registered_expressing_sets():
        for g in graphs:
            want = admits_colouring(g, f) is not None
            got = recognize(class_id, g)
            result.checked += 1
            if want != got:
                result.failures.append(
                    f"{class_id.value} vs {f!r} on {write_graph6(g).decode()}"
                )
    return result


def run_csp_correspondence(
    max_n: int, sets: list[PatternSet] | None = None
) -> SuiteResult:
    """Satisfiability of the boolean instance must match colourability."""
    result = SuiteResult("csp-correspondence")
    graphs = graphs_up_to(max_n)
    if sets is None:
        sets = [
            named("rP3", "bP3"),
            named("rK3", "bK3"),
            named("rK3", "bK3", "rrbK3"),
            named("3K1"),
            named("3K1", "rP3", "bP3"),
            named("rCoP3", "bP3"),
            named("rP3", "bP3", "rK3", "bK3", "rbbK3"),
            named("rbP3", "rK3", "rbbK3"),
            named("rrbK3", "rbbK3"),
            named("rCoP3", "bCoP3", "rP3", "bP3"),
        ]
    for f in sets:
        template = build_template(f)
        for g in graphs:
            instance = build_instance(g, f)
            sat = solve_bruteforce_csp(instance, template) is not None
            want = admits_colouring(g, f) is not None
            result.checked += 1
            if sat != want:
                result.failures.append(
                    f"{f!r} on {write_graph6(g).decode()}: csp={sat} oracle={want}"
                )
    return result


def run_colour_swap_duality(max_n: int) -> SuiteResult:
    result = SuiteResult("colour-swap-duality")
    graphs = graphs_up_to(max_n)
    for f in (named("rP3"), named("rK3", "rrbK3"), named("rCoP3", "bP3"),
              named("rP3", "bP3", "bK3")):
        dual = swap_colours(f)
        for g in graphs:
            a = admits_colouring(g, f) is not None
            b = admits_colouring(g, dual) is not None
            result.checked += 1
            if a != b:
                result.failures.append(f"{f!r} on {write_graph6(g).decode()}")
    return result

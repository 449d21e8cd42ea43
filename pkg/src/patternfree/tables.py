"""Reference tables and their recomputation: operation-preservation tables
for path and triangle sets, the complexity landscape, and the sixteen classes
expressed by at-most-two-edge patterns.  Every cell is recomputed from first
principles and diffed against the expected values embedded here."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .csp import PolymorphismReport, build_template
from .engine import classify_pattern_set
from .hardness import OneInThreeFormula, verify_reduction
from .patterns import PatternSet, named
from .recognizers import ClassId, two_edge_class_of

ALL_OPS = ("min", "max", "majority", "minority")

# (pattern names, expected non-constant preserving operations)
PRESERVE_P3_ROWS: list[tuple[tuple[str, ...], tuple[str, ...]]] = [
    (("rP3",), ("max", "majority")),
    (("bP3",), ("min", "majority")),
    (("rbP3",), ALL_OPS),
    (("rP3", "bP3"), ("majority", "minority")),
    (("rP3", "rbP3"), ALL_OPS),
    (("bP3", "rbP3"), ALL_OPS),
    (("rP3", "bP3", "rbP3"), ALL_OPS),
]

PRESERVE_K3_ROWS: list[tuple[tuple[str, ...], tuple[str, ...]]] = [
    (("rK3",), ("max",)),
    (("rrbK3",), ("max",)),
    (("rK3", "bK3"), ()),
    (("rK3", "rrbK3"), ("max", "majority")),
    (("rK3", "rbbK3"), ("minority",)),
    (("rrbK3", "rbbK3"), ALL_OPS),
    (("rK3", "bK3", "rrbK3"), ()),
    (("rK3", "rrbK3", "rbbK3"), ALL_OPS),
    (("rK3", "bK3", "rrbK3", "rbbK3"), ALL_OPS),
]

_PATH_NAMES = ("rP3", "bP3", "rbP3")
_TRIANGLE_NAMES = ("rK3", "bK3", "rrbK3", "rbbK3")


@dataclass
class TableCheck:
    title: str
    rows: list[tuple[str, str, str, bool]]  # (label, expected, computed, ok)

    @property
    def ok(self) -> bool:
        return all(r[3] for r in self.rows)

    def render(self) -> str:
        width = max(len(r[0]) for r in self.rows)
        lines = [self.title]
        for label, expected, computed, ok in self.rows:
            mark = "ok " if ok else "DIFF"
            lines.append(f"  {mark} {label.ljust(width)}  {computed}")
            if not ok:
                lines.append(f"       {' ' * width}  expected: {expected}")
        return "\n".join(lines)


def _ops_of(f: PatternSet) -> tuple[str, ...]:
    report = PolymorphismReport.of(build_template(f))
    return tuple(op for op in ALL_OPS if getattr(report, op))


def _free_complement(names: tuple[str, ...], universe: tuple[str, ...]) -> str:
    rest = [n for n in universe if n not in names]
    return "{" + ", ".join(rest) + "}" if rest else "(none)"


def _render_ops(ops: tuple[str, ...]) -> str:
    if tuple(ops) == ALL_OPS:
        return "all"
    if not ops:
        return "none"
    return ", ".join(ops)


def check_preserve_table(which: str) -> TableCheck:
    if which == "preserveP3":
        rows_spec = PRESERVE_P3_ROWS
        universe = _PATH_NAMES
        title = "Operations preserving the template: path sets"
    elif which == "preserveK3":
        rows_spec = PRESERVE_K3_ROWS
        universe = _TRIANGLE_NAMES
        title = "Operations preserving the template: triangle sets (up to colour symmetry)"
    else:
        raise ValueError(f"unknown table {which!r}")
    rows = []
    for names, expected in rows_spec:
        computed = _ops_of(named(*names))
        label = "{" + ", ".join(names) + "} | free: " + _free_complement(names, universe)
        rows.append(
            (label, _render_ops(tuple(expected)), _render_ops(computed),
             tuple(computed) == tuple(expected))
        )
    return TableCheck(title, rows)


# ---------------------------------------------------------------------------
# Complexity landscape
# ---------------------------------------------------------------------------

_LANDSCAPE_ROWS: list[tuple[str, str, list[tuple[str, ...]]]] = [
    ("trivial set", "P",
     [("rCoP3", "bCoP3"), ("3K1",), ("rP3", "bP3", "rbP3")]),
    ("contains both one-edge patterns", "P",
     [("rCoP3", "bCoP3", "rP3", "bP3"), ("rCoP3", "bCoP3", "rK3", "bK3")]),
    ("contains 3K1 and both monochromatic triangles", "P",
     [("3K1", "rK3", "bK3"), ("3K1", "rK3", "bK3", "rP3")]),
    ("contains no triangle", "P",
     [("rP3", "bP3"), ("bCoP3", "rP3"), ("3K1", "rP3", "bP3")]),
    ("contains both two-one triangles", "P",
     [("rrbK3", "rbbK3"), ("rP3", "bP3", "rrbK3", "rbbK3")]),
    ("triangle part equals one monochromatic plus its heavy mix", "P",
     [("bP3", "rK3", "rrbK3"), ("rbP3", "rK3", "rrbK3")]),
    ("triangle part pairs a monochromatic with the opposite mix, "
     "with the mixed path", "P",
     [("rbP3", "rK3", "rbbK3")]),
    ("triangle part pairs a monochromatic with the opposite mix, "
     "with both monochromatic paths", "P",
     [("rP3", "bP3", "rK3", "rbbK3")]),
    ("consistency family", "P",
     [("rCoP3", "bP3", "bK3"), ("rCoP3", "bK3")]),
    ("within the elementary family", "P",
     [("rP3", "bP3", "rK3", "bK3"), ("rP3", "bP3", "bK3", "rrbK3", "rbbK3"),
      ("3K1", "rP3", "bP3")]),
    ("both monochromatic triangles only", "NP-complete",
     [("rK3", "bK3")]),
    ("both monochromatic triangles plus one mixed", "NP-complete",
     [("rK3", "bK3", "rbbK3"), ("rK3", "bK3", "rrbK3")]),
]

_POLY_ENGINES = {
    "trivial", "monochromatic", "multipartite-direct", "consistency",
    "structural", "2sat", "gf2", "horn",
}


def _verify_landscape_row(label: str, expected: str,
                          reps: list[tuple[str, ...]]) -> str:
    """Recompute a complexity cell from classifications and polymorphisms."""
    classifications = [classify_pattern_set(named(*names)) for names in reps]
    if expected == "P":
        for names, cls in zip(reps, classifications):
            if cls.engine_choice in _POLY_ENGINES:
                continue
            # the finite-class row decides through exhaustion but its yes-set
            # is finite, which keeps the problem polynomial
            if cls.finite_class:
                continue
            return f"no polynomial route for {{{', '.join(names)}}}"
        return "P"
    # NP rows: Schaefer gives no operation, and the gadget reduction holds
    for names, cls in zip(reps, classifications):
        if cls.polymorphisms is not None and cls.polymorphisms.any_schaefer():
            return f"{{{', '.join(names)}}} unexpectedly tractable"
    for phi in (
        OneInThreeFormula(3, ((1, 2, 3),)),
        OneInThreeFormula(3, ((1, 2, 3), (1, 2, 3))),
        OneInThreeFormula(1, ((1, 1, 1),)),
    ):
        for red_true in (False, True):
            if not verify_reduction(phi, red_true=red_true):
                return "gadget reduction failed"
    return "NP-complete"


def check_landscape_table() -> TableCheck:
    rows = []
    for label, expected, reps in _LANDSCAPE_ROWS:
        computed = _verify_landscape_row(label, expected, reps)
        rows.append((label, expected, computed, computed == expected))
    return TableCheck("Complexity landscape (up to colour symmetry)", rows)


# ---------------------------------------------------------------------------
# The sixteen at-most-two-edge classes
# ---------------------------------------------------------------------------

TWO_EDGE_CLASSES: list[tuple[ClassId, tuple[str, ...]]] = [
    (ClassId.ALL, ("rCoP3",)),
    (ClassId.COMPLETE_MULTIPARTITE, ("rCoP3", "bCoP3")),
    (ClassId.CLUSTER, ("rP3", "bP3", "rbP3")),
    (ClassId.NO_3K1, ("3K1",)),
    (ClassId.COMPLETE_MINUS_MATCHING, ("3K1", "rCoP3", "bCoP3")),
    (ClassId.EMPTY_OR_COMPLETE, ("rCoP3", "bCoP3", "rP3", "bP3", "rbP3")),
    (ClassId.AT_MOST_2_CLIQUES, ("3K1", "rP3", "bP3", "rbP3")),
    (ClassId.COMPLETE_OR_K2, ("3K1", "rCoP3", "bCoP3", "rP3", "bP3", "rbP3")),
    (ClassId.EMPTY_OR_COMPLETE_MINUS_MATCHING, ("rCoP3", "bCoP3", "rP3", "bP3")),
    (ClassId.K1P3_C5_FREE, ("bCoP3", "rP3")),
    (ClassId.NO3K1_C5_FREE, ("3K1", "bCoP3", "rP3")),
    (ClassId.JOIN_OF_CLUSTERS, ("bCoP3", "rP3", "rbP3")),
    (ClassId.JOIN_OF_CLUSTERS_PARTS_LE2, ("3K1", "bCoP3", "rP3", "rbP3")),
    (ClassId.COBIP_OR_CLUSTER, ("bCoP3", "rP3", "bP3")),
    (ClassId.CO_BIPARTITE, ("3K1", "rP3", "bP3")),
    (ClassId.ELEMENTARY, ("rP3", "bP3")),
]

_TWO_EDGE_UNIVERSE = ("3K1", "rCoP3", "bCoP3", "rP3", "bP3", "rbP3")


def check_two_edge_table() -> TableCheck:
    rows = []
    for class_id, names in TWO_EDGE_CLASSES:
        computed = two_edge_class_of(named(*names))
        rows.append(
            ("{" + ", ".join(names) + "}", class_id.value, computed.value,
             computed is class_id)
        )
    # coverage: every subset of the two-edge catalogue lands on these sixteen
    seen: set[ClassId] = set()
    for r in range(0, len(_TWO_EDGE_UNIVERSE) + 1):
        for combo in combinations(_TWO_EDGE_UNIVERSE, r):
            seen.add(two_edge_class_of(named(*combo)))
    expected_ids = {class_id for class_id, _ in TWO_EDGE_CLASSES}
    rows.append(
        ("all 64 subsets cover exactly the sixteen classes",
         "16 classes", f"{len(seen)} classes", seen == expected_ids)
    )
    return TableCheck("Classes expressed by at-most-two-edge sets", rows)


def check_table(which: str) -> TableCheck:
    if which in ("preserveP3", "preserveK3"):
        return check_preserve_table(which)
    if which == "landscape":
        return check_landscape_table()
    if which == "two-edge":
        return check_two_edge_table()
    raise ValueError(
        f"unknown table {which!r}; pick preserveP3, preserveK3, landscape, two-edge"
    )

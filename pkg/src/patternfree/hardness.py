"""NP-hardness gadgetry: build the graph that encodes a positive 1-in-3 SAT
formula for the two-monochromatic-plus-one-mixed-triangle pattern sets,
extract assignments from colourings, and verify the reduction exhaustively
at desk scale."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .graphs import Graph, GraphError, UnsupportedSizeError
from .oracle import ColouringWitness, admits_colouring, verify_colouring
from .patterns import PatternSet, named

# the two symmetric pattern sets whose colouring problem the gadget encodes;
# for the first, a blue occurrence edge means the variable is true
GADGET_SET_BLUE_TRUE = ("bK3", "rK3", "rbbK3")
GADGET_SET_RED_TRUE = ("bK3", "rK3", "rrbK3")

VERIFY_CLAUSE_CAP = 4
VERIFY_VARIABLE_CAP = 6


class FormulaError(ValueError):
    """Raised on malformed 1-in-3 formula input."""


@dataclass(frozen=True)
class OneInThreeFormula:
    """Positive clauses of exactly three (possibly repeated) variables,
    1-indexed."""

    nvars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for clause in self.clauses:
            if len(clause) != 3:
                raise FormulaError(f"clause {clause} does not have three literals")
            for lit in clause:
                if not 1 <= lit <= self.nvars:
                    raise FormulaError(f"literal {lit} out of range 1..{self.nvars}")

    def satisfying_assignments(self):
        """All assignments with exactly one true literal per clause."""
        for bits in product((False, True), repeat=self.nvars):
            if all(sum(bits[v - 1] for v in clause) == 1 for clause in self.clauses):
                yield bits

    def satisfiable(self) -> bool:
        return next(iter(self.satisfying_assignments()), None) is not None


def parse_formula(text: str) -> OneInThreeFormula:
    """Parse 'p 1in3 <nvars> <nclauses>' followed by one clause per line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("p "):
        raise FormulaError("missing 'p 1in3 <nvars> <nclauses>' header")
    header = lines[0].split()
    if len(header) != 4 or header[1] != "1in3":
        raise FormulaError(f"bad header {lines[0]!r}")
    try:
        nvars, nclauses = int(header[2]), int(header[3])
    except ValueError:
        raise FormulaError(f"bad header counts in {lines[0]!r}") from None
    clauses = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise FormulaError(f"clause {ln!r} does not have three literals")
        lits = []
        for p in parts:
            try:
                lit = int(p)
            except ValueError:
                raise FormulaError(f"bad literal {p!r}") from None
            if lit <= 0:
                raise FormulaError(
                    f"literal {lit} is not positive (only positive 1-in-3 input)"
                )
            lits.append(lit)
        clauses.append(tuple(lits))
    if len(clauses) != nclauses:
        raise FormulaError(
            f"header promises {nclauses} clauses, found {len(clauses)}"
        )
    return OneInThreeFormula(nvars, tuple(clauses))


@dataclass
class GadgetGraph:
    graph: Graph
    occurrence_edges: dict[tuple[int, int], tuple[int, int]]
    variable_edges: dict[int, list[tuple[int, int]]]
    clause_triangles: list[tuple[int, int, int]]
    gadget_cliques: list[tuple[int, ...]]

    def occurrence_edge_indices(self) -> dict[str, int]:
        """JSON-friendly map 'clause,slot' -> lexicographic edge index."""
        index = {e: i for i, e in enumerate(self.graph.edges())}
        return {
            f"{ci},{slot}": index[e]
            for (ci, slot), e in sorted(self.occurrence_edges.items())
        }


def build_gadget(phi: OneInThreeFormula) -> GadgetGraph:
    """One vertex-disjoint triangle per clause; every pair of occurrences of
    a variable is joined by a copying gadget (an atom between clauses, a
    block inside one clause, since an atom there would need parallel edges).

    An atom is two 4-cliques sharing an edge, its outer edges identified
    with the two occurrence edges; a block is two atoms sharing an edge.
    """
    edges: list[tuple[int, int]] = []
    occurrence: dict[tuple[int, int], tuple[int, int]] = {}
    triangles: list[tuple[int, int, int]] = []
    cliques: list[tuple[int, ...]] = []
    nv = 0
    for ci, clause in enumerate(phi.clauses):
        t = (nv, nv + 1, nv + 2)
        nv += 3
        triangles.append(t)
        edges += [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])]
        slot_edges = [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])]
        for slot in range(3):
            occurrence[(ci, slot)] = slot_edges[slot]

    def add_k4(e1: tuple[int, int], e2: tuple[int, int]) -> None:
        # duplicate pairs collapse in the simple-graph constructor, so the
        # already-present occurrence edges can be listed again
        cliques.append((*e1, *e2))
        for u, v in combinations((*e1, *e2), 2):
            edges.append((min(u, v), max(u, v)))

    occ_by_var: dict[int, list[tuple[int, int]]] = {}
    for ci, clause in enumerate(phi.clauses):
        for slot, var in enumerate(clause):
            occ_by_var.setdefault(var, []).append((ci, slot))
    for var in sorted(occ_by_var):
        occs = occ_by_var[var]
        for (c1, s1), (c2, s2) in combinations(occs, 2):
            e = occurrence[(c1, s1)]
            g = occurrence[(c2, s2)]
            if c1 != c2:
                mid = (nv, nv + 1)
                nv += 2
                add_k4(e, mid)
                add_k4(mid, g)
            else:
                p1 = (nv, nv + 1)
                p2 = (nv + 2, nv + 3)
                p3 = (nv + 4, nv + 5)
                nv += 6
                add_k4(e, p1)
                add_k4(p1, p2)
                add_k4(p2, p3)
                add_k4(p3, g)
    graph = Graph(nv, edges)
    gadget = GadgetGraph(
        graph=graph,
        occurrence_edges=occurrence,
        variable_edges={
            var: [occurrence[o] for o in occs]
            for var, occs in sorted(occ_by_var.items())
        },
        clause_triangles=triangles,
        gadget_cliques=cliques,
    )
    _check_triangle_census(gadget)
    return gadget


def _check_triangle_census(gg: GadgetGraph) -> None:
    """Every triangle must sit inside one clause triangle or one gadget
    4-clique; anything else means the construction glued something badly."""
    from .recognizers import _triangles

    allowed = {tuple(sorted(t)) for t in gg.clause_triangles}
    for clique in gg.gadget_cliques:
        for tri in combinations(sorted(clique), 3):
            allowed.add(tri)
    for tri in _triangles(gg.graph):
        if tri not in allowed:
            raise AssertionError(f"unexpected triangle {tri} in gadget graph")


def gadget_pattern_set(red_true: bool = False) -> PatternSet:
    return named(*(GADGET_SET_RED_TRUE if red_true else GADGET_SET_BLUE_TRUE))


def extract_assignment(
    w: ColouringWitness, gg: GadgetGraph, *, red_true: bool = False
) -> dict[int, bool]:
    """Variable values read off the occurrence edges; all occurrences of a
    variable must agree (the copying gadgets force this)."""
    colour = w.colouring.as_map()
    true_colour = "r" if red_true else "b"
    values: dict[int, bool] = {}
    for var in sorted(gg.variable_edges):
        seen = {colour[e] for e in gg.variable_edges[var]}
        if len(seen) != 1:
            raise AssertionError(
                f"occurrences of variable {var} got colours {sorted(seen)}; "
                "copying gadgets should have forced agreement"
            )
        values[var] = seen.pop() == true_colour
    return values


def verify_reduction(
    phi: OneInThreeFormula, *, red_true: bool = False, max_order: int = 200
) -> bool:
    """Exhaustive 1-in-3 satisfiability equals gadget colourability.

    Also round-trips any gadget witness through assignment extraction.
    """
    if (len(phi.clauses) > VERIFY_CLAUSE_CAP
            or phi.nvars > VERIFY_VARIABLE_CAP):
        raise UnsupportedSizeError(
            f"reduction verification guarded at {VERIFY_CLAUSE_CAP} clauses "
            f"and {VERIFY_VARIABLE_CAP} variables"
        )
    gg = build_gadget(phi)
    if gg.graph.n > max_order:
        raise UnsupportedSizeError(
            f"gadget on {gg.graph.n} vertices exceeds the verification cap"
        )
    f = gadget_pattern_set(red_true=red_true)
    witness = admits_colouring(gg.graph, f, force=True)
    sat = phi.satisfiable()
    if (witness is not None) != sat:
        return False
    if witness is not None:
        values = extract_assignment(witness, gg, red_true=red_true)
        if not all(
            sum(values[v] for v in clause) == 1 for clause in phi.clauses
        ):
            return False
    return True


def colour_gadget_from_assignment(
    gg: GadgetGraph, values: dict[int, bool], *, red_true: bool = False
) -> ColouringWitness | None:
    """Complete a gadget colouring from a satisfying 1-in-3 assignment by
    fixing the occurrence edges and searching the forced remainder."""
    f = gadget_pattern_set(red_true=red_true)
    true_colour = "r" if red_true else "b"
    false_colour = "b" if red_true else "r"
    fixed: dict[tuple[int, int], str] = {}
    for var, edges in gg.variable_edges.items():
        for e in edges:
            fixed[e] = true_colour if values[var] else false_colour
    return _complete_colouring(gg.graph, f, fixed)


def _complete_colouring(
    graph: Graph, f: PatternSet, fixed: dict[tuple[int, int], str]
) -> ColouringWitness | None:
    from .oracle import EmbeddingTables, _Constraint, masked_search
    from .graphs import COLOURS, EdgeColouring

    tables = EmbeddingTables(graph, f)
    if tables.infeasible:
        return None
    cons = list(tables.constraints)
    for edge, colour in fixed.items():
        ci = COLOURS.index(colour)
        cons.append(_Constraint((tables.edge_index[edge],), 1 << ci))
    values = masked_search(len(graph.edges()), f.k, cons)
    if values is None:
        return None
    witness = ColouringWitness(EdgeColouring(graph, values, f.k))
    witness.checked = verify_colouring(graph, witness.colouring, f)
    return witness if witness.checked else None

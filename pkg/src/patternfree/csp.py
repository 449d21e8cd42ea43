"""Reduction to boolean constraint satisfaction: template and instance
construction, Schaefer-operation closure checks, and the tractable solvers
(2-SAT, Horn propagation, GF(2) elimination) plus an exact fallback."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product

from .graphs import COLOURS, Graph, UnsupportedSizeError, canonical_form, induced_subgraph
from .oracle import _Constraint, free_colourings_of, masked_search
from .patterns import PatternError, PatternSet

BRUTEFORCE_VAR_CAP = 40

OPERATIONS = ("min", "max", "majority", "minority", "constant_r", "constant_b")


class CspContractError(RuntimeError):
    """A solver was invoked although its precondition does not hold."""


@dataclass(frozen=True)
class Relation:
    name: str
    arity: int
    tuples: frozenset[tuple[str, ...]]
    graph_edges: tuple[tuple[int, int], ...]
    order: int


class BooleanTemplate:
    """The boolean structure over {r, b} with one relation per labelled
    underlying graph of the pattern set."""

    def __init__(self, relations: list[Relation]):
        self.relations = {rel.name: rel for rel in sorted(relations, key=lambda r: r.name)}

    def to_json_dict(self) -> dict:
        return {
            "domain": ["r", "b"],
            "relations": [
                {
                    "name": rel.name,
                    "arity": rel.arity,
                    "order": rel.order,
                    "edges": [list(e) for e in rel.graph_edges],
                    "tuples": sorted("".join(t) for t in rel.tuples),
                }
                for rel in self.relations.values()
            ],
        }


@dataclass
class CspInstance:
    """Variables are the edges of the input graph in lexicographic order."""

    nvars: int
    constraints: list[tuple[str, tuple[int, ...]]]
    degenerate: bool = False


def _relation_name(order: int, edges: tuple[tuple[int, int], ...]) -> str:
    if not edges:
        return f"R[{order}K1]"
    return "R[" + ",".join(f"{u}{v}" for u, v in edges) + "]"


def _labelled_variants(u: Graph) -> list[Graph]:
    """All labelled graphs on {0..n-1} isomorphic to u."""
    seen = set()
    out = []
    for perm in permutations(range(u.n)):
        edges = tuple(sorted(
            (min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in u.edges()
        ))
        if edges not in seen:
            seen.add(edges)
            out.append(Graph(u.n, edges))
    return out


@lru_cache(maxsize=512)
def build_template(f: PatternSet) -> BooleanTemplate:
    """One relation per labelled underlying graph; tuples are the f-free
    colourings in lexicographic edge coding.  Edgeless graphs get an empty
    unary relation."""
    if f.k != 2:
        raise PatternError("boolean templates are defined for k=2 only")
    if f.max_order() > 4:
        raise UnsupportedSizeError("boolean templates support patterns up to order 4")
    relations = []
    for u in f.underlying_classes().values():
        for labelled in _labelled_variants(u):
            name = _relation_name(labelled.n, labelled.edges())
            if not labelled.edges():
                relations.append(Relation(name, 1, frozenset(), (), labelled.n))
            else:
                tuples = frozenset(free_colourings_of(labelled, f))
                relations.append(
                    Relation(name, len(labelled.edges()), tuples,
                             labelled.edges(), labelled.n)
                )
    return BooleanTemplate(relations)


def build_instance(g: Graph, f: PatternSet) -> CspInstance:
    """One constraint per increasing vertex tuple of g inducing a labelled
    underlying graph of f; if f forbids an edgeless graph that embeds in g,
    the one-variable unsatisfiable instance is returned instead."""
    template = build_template(f)
    edgeless = [rel for rel in template.relations.values() if not rel.graph_edges]
    from .graphs import contains_induced
    from .smallgraphs import empty_graph

    for rel in edgeless:
        if contains_induced(g, empty_graph(rel.order)) is not None:
            return CspInstance(1, [(rel.name, (0,))], degenerate=True)
    edge_index = {e: i for i, e in enumerate(g.edges())}
    by_signature = {
        (rel.order, rel.graph_edges): rel.name
        for rel in template.relations.values()
        if rel.graph_edges
    }
    orders = sorted({rel.order for rel in template.relations.values() if rel.graph_edges})
    constraints = []
    for order in orders:
        for subset in combinations(range(g.n), order):
            local = induced_subgraph(g, subset)
            name = by_signature.get((order, local.edges()))
            if name is None:
                continue
            variables = tuple(
                edge_index[(subset[i], subset[j])] for i, j in local.edges()
            )
            constraints.append((name, variables))
    return CspInstance(len(g.edges()), constraints)


# ---------------------------------------------------------------------------
# Polymorphisms
# ---------------------------------------------------------------------------

def _op_min(a: str, b: str) -> str:
    return "r" if "r" in (a, b) else "b"


def _op_max(a: str, b: str) -> str:
    return "b" if "b" in (a, b) else "r"


def _op_majority(a: str, b: str, c: str) -> str:
    return "b" if (a, b, c).count("b") >= 2 else "r"


def _op_minority(a: str, b: str, c: str) -> str:
    return "b" if (a, b, c).count("b") in (1, 3) else "r"


def has_polymorphism(t: BooleanTemplate, op: str) -> bool:
    """True iff every relation of the template is closed under the operation
    applied componentwise (convention r < b)."""
    if op not in OPERATIONS:
        raise ValueError(f"unknown operation {op!r}")
    for rel in t.relations.values():
        tuples = rel.tuples
        if op in ("constant_r", "constant_b"):
            const = op[-1]
            if tuples and (const,) * rel.arity not in tuples:
                return False
        elif op in ("min", "max"):
            fn = _op_min if op == "min" else _op_max
            for t1, t2 in product(tuples, repeat=2):
                if tuple(fn(a, b) for a, b in zip(t1, t2)) not in tuples:
                    return False
        else:
            fn = _op_majority if op == "majority" else _op_minority
            for t1, t2, t3 in product(tuples, repeat=3):
                if tuple(fn(a, b, c) for a, b, c in zip(t1, t2, t3)) not in tuples:
                    return False
    return True


@dataclass(frozen=True)
class PolymorphismReport:
    min: bool
    max: bool
    majority: bool
    minority: bool
    constant_r: bool
    constant_b: bool

    @classmethod
    def of(cls, t: BooleanTemplate) -> "PolymorphismReport":
        return cls(**{op: has_polymorphism(t, op) for op in OPERATIONS})

    def as_dict(self) -> dict[str, bool]:
        return {op: getattr(self, op) for op in OPERATIONS}

    def any_schaefer(self) -> bool:
        return any(self.as_dict().values())

    def names(self) -> list[str]:
        return [op for op in OPERATIONS if getattr(self, op)]


# ---------------------------------------------------------------------------
# Solvers
# ---------------------------------------------------------------------------

def _check_assignment(
    instance: CspInstance, t: BooleanTemplate, values: list[str]
) -> None:
    for name, variables in instance.constraints:
        rel = t.relations[name]
        if tuple(values[v] for v in variables) not in rel.tuples:
            raise CspContractError(f"assignment violates {name} on {variables}")


def solve_bruteforce_csp(
    instance: CspInstance, t: BooleanTemplate
) -> list[str] | None:
    """Exact backtracking fallback over {r,b} assignments."""
    if instance.nvars > BRUTEFORCE_VAR_CAP:
        raise UnsupportedSizeError(
            f"bruteforce CSP guarded at {BRUTEFORCE_VAR_CAP} variables, "
            f"got {instance.nvars}"
        )
    cons = []
    for name, variables in instance.constraints:
        rel = t.relations[name]
        mask = 0
        for tup in rel.tuples:
            idx = 0
            for slot, colour in enumerate(tup):
                idx += COLOURS.index(colour) * (2 ** slot)
            mask |= 1 << idx
        cons.append(_Constraint(variables, mask))
    values = masked_search(instance.nvars, 2, cons)
    if values is not None:
        _check_assignment(instance, t, values)
    return values


# -- 2-SAT ------------------------------------------------------------------

def _binary_decomposition(rel: Relation) -> list[tuple[int, int, frozenset]]:
    """Pairwise projections of a relation, validated to reconstruct it."""
    m = rel.arity
    projections = []
    for i in range(m):
        for j in range(i, m):
            proj = frozenset((t[i], t[j]) for t in rel.tuples)
            projections.append((i, j, proj))
    # exactness: the projections must cut out exactly the original tuples
    for cand in product("rb", repeat=m):
        member = all((cand[i], cand[j]) in proj for i, j, proj in projections)
        if member != (cand in rel.tuples):
            raise CspContractError(
                f"relation {rel.name} is not 2-decomposable; "
                "the majority precondition cannot hold"
            )
    return projections


def solve_2sat(instance: CspInstance, t: BooleanTemplate) -> list[str] | None:
    """Implication-graph 2-SAT over the binary-clause decomposition of every
    relation.  Precondition: the template is majority-closed."""
    if not has_polymorphism(t, "majority"):
        raise CspContractError("solve_2sat requires the majority polymorphism")
    nvars = instance.nvars
    # literal 2v: "edge v is blue"; literal 2v+1: its negation
    adj: list[list[int]] = [[] for _ in range(2 * nvars)]

    def lit(var: int, is_blue: bool) -> int:
        return 2 * var + (0 if is_blue else 1)

    def add_or(l1: int, l2: int) -> None:
        adj[l1 ^ 1].append(l2)
        adj[l2 ^ 1].append(l1)

    decomposed: dict[str, list[tuple[int, int, frozenset]]] = {}
    for name, variables in instance.constraints:
        rel = t.relations[name]
        if not rel.tuples:
            return None
        if name not in decomposed:
            decomposed[name] = _binary_decomposition(rel)
        for i, j, proj in decomposed[name]:
            u, v = variables[i], variables[j]
            if i == j:
                allowed = {a for a, _ in proj}
                if not allowed:
                    return None
                if allowed == {"b"}:
                    add_or(lit(u, True), lit(u, True))
                elif allowed == {"r"}:
                    add_or(lit(u, False), lit(u, False))
                continue
            for a, b in product("rb", repeat=2):
                if (a, b) not in proj:
                    add_or(lit(u, a == "r"), lit(v, b == "r"))
    comp = _tarjan_scc(adj)
    values = []
    for v in range(nvars):
        if comp[2 * v] == comp[2 * v + 1]:
            return None
        # Tarjan emits components in reverse topological order; a literal
        # whose component comes earlier is implied-by more, so make it true
        values.append("b" if comp[2 * v] < comp[2 * v + 1] else "r")
    _check_assignment(instance, t, values)
    return values


def _tarjan_scc(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for k in range(pi, len(adj[v])):
                w = adj[v][k]
                if index[w] == -1:
                    work[-1] = (v, k + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comp


# -- GF(2) ------------------------------------------------------------------

def _affine_rows(rel: Relation) -> list[tuple[int, int]]:
    """Equations (coefficient mask over slots, rhs bit) cutting out exactly
    the relation's tuples under blue=0, red=1."""
    m = rel.arity
    tuples = sorted(rel.tuples)
    if not tuples:
        return [(0, 1)]  # 0 = 1, unsatisfiable
    vecs = [sum((1 << i) for i, c in enumerate(t) if c == "r") for t in tuples]
    t0 = vecs[0]
    diffs = [v ^ t0 for v in vecs]
    rows = []
    for a in range(1, 1 << m):
        if all(bin(a & d).count("1") % 2 == 0 for d in diffs):
            rows.append((a, bin(a & t0).count("1") % 2))
    # validate: the solution count of the extracted system must match
    sols = 0
    for cand in range(1 << m):
        if all(bin(a & cand).count("1") % 2 == rhs for a, rhs in rows):
            sols += 1
    if sols != len(tuples):
        raise CspContractError(
            f"relation {rel.name} is not affine; "
            "the minority precondition cannot hold"
        )
    return rows


def solve_gf2(instance: CspInstance, t: BooleanTemplate) -> list[str] | None:
    """Gaussian elimination over GF(2), blue=0 and red=1; free variables are
    set to blue.  Precondition: the template is minority-closed."""
    if not has_polymorphism(t, "minority"):
        raise CspContractError("solve_gf2 requires the minority polymorphism")
    nvars = instance.nvars
    rhs_bit = 1 << nvars
    rows: list[int] = []
    affine: dict[str, list[tuple[int, int]]] = {}
    for name, variables in instance.constraints:
        rel = t.relations[name]
        if name not in affine:
            affine[name] = _affine_rows(rel)
        for coeffs, rhs in affine[name]:
            row = rhs * rhs_bit
            for slot in range(rel.arity):
                if coeffs >> slot & 1:
                    row ^= 1 << variables[slot]
            if row:
                rows.append(row)
    # row reduction; each pivot row's highest variable bit is its column
    pivots: dict[int, int] = {}
    for row in rows:
        for col in sorted(pivots, reverse=True):
            if row >> col & 1:
                row ^= pivots[col]
        if row == rhs_bit:
            return None
        if row:
            col = (row & (rhs_bit - 1)).bit_length() - 1
            pivots[col] = row
    values = ["b"] * nvars
    # substitute in ascending pivot order; free variables stay blue (0)
    for col in sorted(pivots):
        row = pivots[col]
        acc = row >> nvars & 1
        for other in range(col):
            if row >> other & 1 and values[other] == "r":
                acc ^= 1
        values[col] = "r" if acc else "b"
    _check_assignment(instance, t, values)
    return values


# -- Horn propagation --------------------------------------------------------

def _horn_clauses(rel: Relation, top: str) -> list[tuple[tuple[int, ...], int]]:
    """Clauses (negative slots, positive slot or -1) valid on the relation,
    where a positive literal asserts the `top` colour; validated to
    reconstruct the relation exactly."""
    m = rel.arity
    clauses = []
    slots = range(m)
    for pos in list(slots) + [-1]:
        rest = [s for s in slots if s != pos]
        for r in range(len(rest) + 1):
            for negs in combinations(rest, r):
                if pos == -1 and not negs:
                    continue
                ok = all(
                    any(t[s] != top for s in negs) or (pos != -1 and t[pos] == top)
                    for t in rel.tuples
                )
                if ok:
                    clauses.append((negs, pos))
    for cand in product("rb", repeat=m):
        sat = all(
            any(cand[s] != top for s in negs) or (pos != -1 and cand[pos] == top)
            for negs, pos in clauses
        )
        if sat != (cand in rel.tuples):
            side = "min" if top == "b" else "max"
            raise CspContractError(
                f"relation {rel.name} is not Horn-expressible; "
                f"the {side} precondition cannot hold"
            )
    return clauses


def solve_horn(
    instance: CspInstance, t: BooleanTemplate, polarity: str
) -> list[str] | None:
    """Unit propagation to the least fixed point.  polarity='min' starts all
    red and propagates forced blues (Horn, min-closed relations);
    polarity='max' is the mirror image (dual Horn, max-closed)."""
    if polarity not in ("min", "max"):
        raise ValueError(f"polarity must be 'min' or 'max', got {polarity!r}")
    if not has_polymorphism(t, polarity):
        raise CspContractError(f"solve_horn requires the {polarity} polymorphism")
    top = "b" if polarity == "min" else "r"
    bottom = "r" if top == "b" else "b"
    ground: list[tuple[tuple[int, ...], int]] = []
    compiled: dict[str, list[tuple[tuple[int, ...], int]]] = {}
    for name, variables in instance.constraints:
        rel = t.relations[name]
        if not rel.tuples:
            return None
        if name not in compiled:
            compiled[name] = _horn_clauses(rel, top)
        for negs, pos in compiled[name]:
            ground.append(
                (tuple(variables[s] for s in negs),
                 variables[pos] if pos != -1 else -1)
            )
    is_top = [False] * instance.nvars
    changed = True
    while changed:
        changed = False
        for negs, pos in ground:
            if all(is_top[v] for v in negs):
                if pos == -1:
                    return None
                if not is_top[pos]:
                    is_top[pos] = True
                    changed = True
    values = [top if flag else bottom for flag in is_top]
    _check_assignment(instance, t, values)
    return values

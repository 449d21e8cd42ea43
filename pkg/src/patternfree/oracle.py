"""Exhaustive ground-truth decision procedure for pattern-free colourability.

Every other engine in the package is validated against this one.  The search
backtracks over edges in lexicographic order (red first) and propagates
forced colours through precomputed pattern-embedding tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .graphs import (
    COLOURS,
    EdgeColouring,
    Graph,
    GraphError,
    UnsupportedSizeError,
    canonical_form,
    connected_components,
    induced_embeddings,
    induced_subgraph,
    induced_subsets,
    iter_bits,
)
from .patterns import Pattern, PatternSet

ORACLE_ORDER_CAP = 14
COUNT_ORDER_CAP = 8


@dataclass
class ColouringWitness:
    """A colouring together with a flag recording that it was verified."""

    colouring: EdgeColouring
    checked: bool = False

    def colour_string(self) -> str:
        return "".join(self.colouring.colours)


# ---------------------------------------------------------------------------
# Embedding tables
# ---------------------------------------------------------------------------

def _subsets_inducing(g: Graph, u: Graph):
    """Vertex subsets of g inducing u, as sorted tuples (u has >= 1 edge)."""
    if u.n == 3:
        m = u.edge_count()
        if m == 1:  # edge plus isolated vertex
            for a, b in g.edges():
                others = ~(g.adj[a] | g.adj[b] | 1 << a | 1 << b)
                for w in iter_bits(others & ((1 << g.n) - 1)):
                    yield tuple(sorted((a, b, w)))
            return
        if m == 2:  # path on three vertices
            for v in range(g.n):
                nbrs = list(iter_bits(g.adj[v]))
                for a, b in combinations(nbrs, 2):
                    if not g.has_edge(a, b):
                        yield tuple(sorted((a, v, b)))
            return
        if m == 3:  # triangle
            for a, b in g.edges():
                common = g.adj[a] & g.adj[b]
                for w in iter_bits(common):
                    if w > b:
                        yield (a, b, w)
            return
    yield from induced_subsets(g, u)


class _Constraint:
    __slots__ = ("positions", "mask")

    def __init__(self, positions: tuple[int, ...], mask: int):
        self.positions = positions
        self.mask = mask


def _slot_filters(m: int, k: int) -> list[list[int]]:
    """filters[slot][colour] = bitmask of tuple indices with that digit."""
    total = k ** m
    filters = [[0] * k for _ in range(m)]
    for idx in range(total):
        rest = idx
        for slot in range(m):
            filters[slot][rest % k] |= 1 << idx
            rest //= k
    return filters


_FILTER_CACHE: dict[tuple[int, int], list[list[int]]] = {}


def slot_filters(m: int, k: int) -> list[list[int]]:
    key = (m, k)
    if key not in _FILTER_CACHE:
        _FILTER_CACHE[key] = _slot_filters(m, k)
    return _FILTER_CACHE[key]


class EmbeddingTables:
    """Per-(graph, pattern set) tables: one constraint per pattern embedding."""

    def __init__(self, g: Graph, f: PatternSet):
        self.g = g
        self.k = f.k
        self.edge_index = {e: i for i, e in enumerate(g.edges())}
        self.infeasible = False
        self.constraints: list[_Constraint] = []
        by_class: dict[bytes, list[Pattern]] = {}
        for p in f:
            by_class.setdefault(canonical_form(p.graph), []).append(p)
        for patterns in by_class.values():
            u = patterns[0].graph
            if not u.edges():
                if _has_independent_set(g, u.n):
                    self.infeasible = True
                continue
            for subset in _subsets_inducing(g, u):
                self._add_constraint(subset, patterns)

    def _add_constraint(self, subset: tuple[int, ...], patterns: list[Pattern]) -> None:
        local = induced_subgraph(self.g, subset)
        local_edges = local.edges()
        m = len(local_edges)
        positions = tuple(
            self.edge_index[(subset[i], subset[j])] for i, j in local_edges
        )
        forbidden = 0
        k = self.k
        for p in patterns:
            for image in induced_embeddings(local, p.graph):
                # image[i] = local vertex carrying pattern vertex i
                idx = 0
                for slot, (i, j) in enumerate(local_edges):
                    a, b = image.index(i), image.index(j)
                    colour = p.colours[p.graph.edges().index((min(a, b), max(a, b)))]
                    idx += COLOURS.index(colour) * (k ** slot)
                forbidden |= 1 << idx
        allowed = (1 << (k ** m)) - 1 & ~forbidden
        if allowed == 0 and m == 0:
            self.infeasible = True
            return
        self.constraints.append(_Constraint(positions, allowed))

    def tuple_index(self, constraint: _Constraint, colours: list[str | None]) -> int:
        idx = 0
        for slot, pos in enumerate(constraint.positions):
            idx += COLOURS.index(colours[pos]) * (self.k ** slot)
        return idx


def _has_independent_set(g: Graph, size: int) -> bool:
    from .smallgraphs import empty_graph
    from .graphs import contains_induced

    return contains_induced(g, empty_graph(size)) is not None


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------

def verify_colouring(g: Graph, c: EdgeColouring, f: PatternSet) -> bool:
    """True iff no vertex subset of g induces a member of f (graph + colours).

    Edgeless patterns are checked against the underlying graph only.
    """
    if c.graph != g:
        raise GraphError("colouring belongs to a different graph")
    if c.k != f.k:
        raise GraphError(f"colouring has k={c.k} but pattern set has k={f.k}")
    tables = EmbeddingTables(g, f)
    if tables.infeasible:
        return False
    colours = list(c.colours)
    for con in tables.constraints:
        if not con.mask >> tables.tuple_index(con, colours) & 1:
            return False
    return True


def admits_colouring(
    g: Graph,
    f: PatternSet,
    *,
    max_order: int = ORACLE_ORDER_CAP,
    force: bool = False,
) -> ColouringWitness | None:
    """First f-free colouring of g in (edge-lex, red-first) order, or None.

    Backtracking with forced-colour propagation; `force=True` overrides the
    desk-scale order guard.
    """
    if g.n > max_order and not force:
        raise UnsupportedSizeError(
            f"oracle guarded at order {max_order}, got {g.n} (use force to override)"
        )
    assignment = _decide(g, f)
    if assignment is None:
        return None
    witness = ColouringWitness(EdgeColouring(g, assignment, f.k))
    if not verify_colouring(g, witness.colouring, f):
        raise AssertionError("oracle produced an invalid witness")
    witness.checked = True
    return witness


def _decide(g: Graph, f: PatternSet) -> list[str] | None:
    """Search per connected component when no pattern spans components."""
    comps = connected_components(g)
    if len(comps) > 1 and all(
        len(connected_components(p.graph)) == 1 for p in f
    ):
        edge_pos = {e: i for i, e in enumerate(g.edges())}
        out: list[str] = ["r"] * len(g.edges())
        for comp in comps:
            verts = sorted(comp)
            h = induced_subgraph(g, verts)
            tables = EmbeddingTables(h, f)
            if tables.infeasible:
                return None
            sub = _search(h, tables)
            if sub is None:
                return None
            # every edge lies in exactly one component, and the relabelling
            # preserves lexicographic edge order, so the merged witness is
            # the same one the undivided search would find
            for (i, j), colour in zip(h.edges(), sub):
                out[edge_pos[(verts[i], verts[j])]] = colour
        return out
    tables = EmbeddingTables(g, f)
    if tables.infeasible:
        return None
    return _search(g, tables)


def _search(g: Graph, tables: EmbeddingTables) -> list[str] | None:
    return masked_search(len(g.edges()), tables.k, tables.constraints)


def masked_search(
    nvars: int, k: int, cons: list[_Constraint]
) -> list[str] | None:
    """First satisfying assignment of a tuple-mask CSP in (var, colour) lex
    order, or None.  Constraint positions must be distinct within a constraint.

    Branches on the smallest unassigned variable, colour order r < b (< g),
    and propagates forced colours; propagation only commits implied values,
    so the first assignment found is the lexicographically least solution.
    """
    masks = [c.mask for c in cons]
    watch: list[list[tuple[int, int]]] = [[] for _ in range(nvars)]
    filters: list[list[list[int]]] = []
    for ci, c in enumerate(cons):
        if c.mask == 0:
            return None
        filt = slot_filters(len(c.positions), k)
        filters.append(filt)
        for slot, pos in enumerate(c.positions):
            watch[pos].append((ci, slot))
    values: list[int] = [-1] * nvars

    def set_value(var: int, colour: int, trail: list[tuple[int, int]]) -> bool:
        """Assign and propagate; record mask changes on the trail."""
        queue = [(var, colour)]
        while queue:
            v, col = queue.pop()
            if values[v] != -1:
                if values[v] != col:
                    return False
                continue
            values[v] = col
            trail.append((-1, v))
            for ci, slot in watch[v]:
                old = masks[ci]
                new = old & filters[ci][slot][col]
                if new != old:
                    trail.append((ci, old))
                    masks[ci] = new
                    if new == 0:
                        return False
                    filt = filters[ci]
                    for s2, p2 in enumerate(cons[ci].positions):
                        if values[p2] != -1:
                            continue
                        forced = -1
                        for col2 in range(k):
                            if new & filt[s2][col2]:
                                if forced != -1:
                                    forced = -2
                                    break
                                forced = col2
                        if forced == -1:
                            return False
                        if forced >= 0:
                            queue.append((p2, forced))
        return True

    def undo(trail: list[tuple[int, int]], mark: int) -> None:
        while len(trail) > mark:
            ci, data = trail.pop()
            if ci == -1:
                values[data] = -1
            else:
                masks[ci] = data

    trail: list[tuple[int, int]] = []
    if nvars == 0:
        return []

    # root-level failed-literal probing: a colour whose propagation already
    # fails can never appear, so its alternative is implied; iterating this
    # to a fixpoint refutes globally-inconsistent instances without search
    changed = True
    while changed:
        changed = False
        for v in range(nvars):
            if values[v] != -1:
                continue
            good_cols = []
            for col in range(k):
                mark = len(trail)
                ok = set_value(v, col, trail)
                undo(trail, mark)
                if ok:
                    good_cols.append(col)
            if not good_cols:
                return None
            if len(good_cols) == 1:
                if not set_value(v, good_cols[0], trail):
                    return None
                changed = True
    root_mark = len(trail)

    # stack entries: (var, next colour to try, trail mark before this var)
    start = 0
    while start < nvars and values[start] != -1:
        start += 1
    if start == nvars:
        return [COLOURS[v] for v in values]
    stack = [(start, 0, root_mark)]
    while stack:
        var, colour, mark = stack.pop()
        if colour >= k:
            continue
        stack.append((var, colour + 1, mark))
        undo(trail, mark)
        submark = len(trail)
        if not set_value(var, colour, trail):
            undo(trail, submark)
            continue
        nxt = var
        while nxt < nvars and values[nxt] != -1:
            nxt += 1
        if nxt == nvars:
            return [COLOURS[v] for v in values]
        stack.append((nxt, 0, len(trail)))
    return None


def count_colourings(g: Graph, f: PatternSet) -> int:
    """Exact number of f-free labelled k-edge-colourings of g."""
    if g.n > COUNT_ORDER_CAP:
        raise UnsupportedSizeError(
            f"counting guarded at order {COUNT_ORDER_CAP}, got {g.n}"
        )
    tables = EmbeddingTables(g, f)
    if tables.infeasible:
        return 0
    nvars = len(g.edges())
    k = f.k
    constrained = sorted({p for c in tables.constraints for p in c.positions})
    free = nvars - len(constrained)
    # a constraint is checked once its largest variable gets a colour;
    # variables are filled in ascending order, so all others are set by then
    cons_at: dict[int, list[_Constraint]] = {}
    for c in tables.constraints:
        cons_at.setdefault(max(c.positions), []).append(c)
    colours: list[str | None] = [None] * nvars

    def rec(i: int) -> int:
        if i == len(constrained):
            return 1
        var = constrained[i]
        total = 0
        for colour in COLOURS[:k]:
            colours[var] = colour
            if all(
                c.mask >> tables.tuple_index(c, colours) & 1
                for c in cons_at.get(var, [])
            ):
                total += rec(i + 1)
            colours[var] = None
        return total

    return rec(0) * k ** free


def free_colourings_of(p: Graph, f: PatternSet) -> set[tuple[str, ...]]:
    """All f-free colourings of the fixed labelled graph p, as tuples in
    lexicographic edge order."""
    if p.n > 4:
        raise UnsupportedSizeError(f"free-colourings guarded at order 4, got {p.n}")
    out = set()
    for colours in product(COLOURS[:f.k], repeat=len(p.edges())):
        if verify_colouring(p, EdgeColouring(p, colours, f.k), f):
            out.add(colours)
    return out

"""Edge-coloured patterns: the three-vertex catalogue, pattern-set parsing
and canonicalization, trivial/universal/finite syntactic tests, and the
k-colour pattern-set constructors."""

from __future__ import annotations

from itertools import permutations, product

from .graphs import (
    COLOURS,
    EdgeColouring,
    Graph,
    GraphError,
    UnsupportedSizeError,
    canonical_form,
    enumerate_nonisomorphic_graphs,
)

PATTERN_ORDER_CAP = 6


class PatternError(GraphError):
    """Raised on a malformed pattern or pattern-set description."""


class Pattern:
    """An edge-coloured graph forbidden as an induced coloured subgraph."""

    __slots__ = ("graph", "colours", "k", "_key")

    def __init__(self, graph: Graph, colours: tuple[str, ...] | list[str], k: int = 2):
        self.graph = graph
        self.colours = tuple(colours)
        self.k = k
        if len(self.colours) != len(graph.edges()):
            raise PatternError(
                f"pattern colouring has {len(self.colours)} entries "
                f"for {len(graph.edges())} edges"
            )
        palette = COLOURS[:k]
        for c in self.colours:
            if c not in palette:
                raise PatternError(f"colour {c!r} out of range for k={k}")
        self._key: bytes | None = None

    def colouring(self) -> EdgeColouring:
        return EdgeColouring(self.graph, self.colours, self.k)

    def canonical_key(self) -> bytes:
        """Coloured-isomorphism key; colours are never permuted."""
        if self._key is None:
            self._key = coloured_canonical_key(self.graph, self.colours)
        return self._key

    def is_edgeless(self) -> bool:
        return not self.colours

    def is_monochromatic(self, colour: str) -> bool:
        """True iff the pattern has at least one edge, all of colour `colour`."""
        return bool(self.colours) and all(c == colour for c in self.colours)

    def swap(self) -> "Pattern":
        if self.k != 2:
            raise PatternError("colour swap is defined for k=2 only")
        flip = {"r": "b", "b": "r"}
        return Pattern(self.graph, tuple(flip[c] for c in self.colours), 2)

    def colour_subgraph(self, colour: str) -> Graph:
        """Spanning subgraph formed by the edges of the given colour."""
        edges = [e for e, c in zip(self.graph.edges(), self.colours) if c == colour]
        return Graph(self.graph.n, edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Pattern):
            return NotImplemented
        return self.canonical_key() == other.canonical_key() and self.k == other.k

    def __hash__(self) -> int:
        return hash((self.k, self.canonical_key()))

    def __repr__(self) -> str:
        name = pattern_name(self)
        if name:
            return f"Pattern({name})"
        return f"Pattern({self.graph!r}, {''.join(self.colours)!r})"


def coloured_canonical_key(graph: Graph, colours: tuple[str, ...]) -> bytes:
    """Smallest (adjacency, colours) encoding over all vertex relabellings.

    Brute force over permutations; pattern orders are capped at 6, so this
    is at most 720 candidates.
    """
    if graph.n > PATTERN_ORDER_CAP:
        raise UnsupportedSizeError(
            f"coloured canonical key capped at order {PATTERN_ORDER_CAP}"
        )
    colour_of = dict(zip(graph.edges(), colours))
    best: str | None = None
    for perm in permutations(range(graph.n)):
        # perm[i] = original vertex placed at new position i
        cells = []
        for u in range(graph.n):
            for v in range(u + 1, graph.n):
                a, b = perm[u], perm[v]
                if a > b:
                    a, b = b, a
                cells.append(colour_of.get((a, b), "-"))
        cand = "".join(cells)
        if best is None or cand < best:
            best = cand
    return f"{graph.n}:{best or ''}".encode("ascii")


class PatternSet:
    """A canonicalized, deduplicated finite set of patterns with one colour count."""

    __slots__ = ("k", "members")

    def __init__(self, members, k: int = 2):
        members = list(members)
        for p in members:
            if p.k != k:
                raise PatternError(
                    f"pattern with colour count {p.k} in a k={k} set"
                )
        dedup = {}
        for p in members:
            dedup.setdefault(p.canonical_key(), p)
        self.k = k
        self.members = tuple(sorted(dedup.values(), key=Pattern.canonical_key))

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, p: Pattern) -> bool:
        return any(m.canonical_key() == p.canonical_key() for m in self.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PatternSet):
            return NotImplemented
        return self.k == other.k and [m.canonical_key() for m in self.members] == [
            m.canonical_key() for m in other.members
        ]

    def __hash__(self) -> int:
        return hash((self.k, tuple(m.canonical_key() for m in self.members)))

    def union(self, other: "PatternSet") -> "PatternSet":
        if self.k != other.k:
            raise PatternError("cannot merge pattern sets with different colour counts")
        return PatternSet(list(self.members) + list(other.members), self.k)

    def names(self) -> list[str]:
        """Catalogue names of the members, inline literals for the rest."""
        out = []
        for p in self.members:
            out.append(pattern_name(p) or _inline_literal(p))
        return out

    def max_order(self) -> int:
        return max((p.graph.n for p in self.members), default=0)

    def underlying_classes(self) -> dict[bytes, Graph]:
        """Distinct underlying graphs keyed by canonical form."""
        out: dict[bytes, Graph] = {}
        for p in self.members:
            out.setdefault(canonical_form(p.graph), p.graph)
        return out

    def __repr__(self) -> str:
        return f"PatternSet({{{' '.join(self.names())}}}, k={self.k})"


# ---------------------------------------------------------------------------
# Named catalogue (all 2-edge-coloured graphs on three vertices)
# ---------------------------------------------------------------------------

def _p3() -> Graph:
    return Graph(3, [(0, 1), (0, 2)])


def _k3() -> Graph:
    return Graph(3, [(0, 1), (0, 2), (1, 2)])


CATALOGUE: dict[str, Pattern] = {
    "3K1": Pattern(Graph(3), ()),
    "rCoP3": Pattern(Graph(3, [(0, 1)]), ("r",)),
    "bCoP3": Pattern(Graph(3, [(0, 1)]), ("b",)),
    "rP3": Pattern(_p3(), ("r", "r")),
    "bP3": Pattern(_p3(), ("b", "b")),
    "rbP3": Pattern(_p3(), ("r", "b")),
    "rK3": Pattern(_k3(), ("r", "r", "r")),
    "bK3": Pattern(_k3(), ("b", "b", "b")),
    "rrbK3": Pattern(_k3(), ("r", "r", "b")),
    "rbbK3": Pattern(_k3(), ("r", "b", "b")),
}

_KEY_TO_NAME = {p.canonical_key(): name for name, p in CATALOGUE.items()}


def pattern_name(p: Pattern) -> str | None:
    """Catalogue name of a pattern, if it has one (k=2, three vertices)."""
    if p.k != 2:
        return None
    return _KEY_TO_NAME.get(p.canonical_key())


def named(*names: str) -> PatternSet:
    """Pattern set from catalogue names, e.g. named('rP3', 'bP3')."""
    return PatternSet([CATALOGUE[n] for n in names], 2)


def _inline_literal(p: Pattern) -> str:
    parts = [f"n={p.graph.n}"]
    for (u, v), c in zip(p.graph.edges(), p.colours):
        parts.append(f"{u}-{v}:{c}")
    return ";".join(parts)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

def parse_pattern_set(text: str) -> PatternSet:
    """Parse the whitespace-separated pattern-set format.

    Tokens are catalogue names or inline literals "n=<order>;<u>-<v>:<colour>;...".
    A leading "k=<int>" directive sets the colour count (default 2).
    """
    k = 2
    members: list[Pattern] = []
    tokens: list[tuple[int, str]] = []
    for lineno, line in enumerate(text.splitlines() or [""], start=1):
        line = line.split("#", 1)[0]
        for tok in line.split():
            tokens.append((lineno, tok))
    for pos, (lineno, tok) in enumerate(tokens):
        if tok.startswith("k="):
            if pos != 0:
                raise PatternError(f"line {lineno}: k= directive must come first")
            try:
                k = int(tok[2:])
            except ValueError:
                raise PatternError(f"line {lineno}: bad colour count {tok!r}") from None
            if not 2 <= k <= 3:
                raise PatternError(f"line {lineno}: colour count must be 2 or 3")
            continue
        if tok in CATALOGUE:
            base = CATALOGUE[tok]
            members.append(Pattern(base.graph, base.colours, k))
            continue
        if tok.startswith("n="):
            members.append(_parse_inline(tok, k, lineno))
            continue
        raise PatternError(f"line {lineno}: unknown pattern name {tok!r}")
    return PatternSet(members, k)


def _parse_inline(tok: str, k: int, lineno: int) -> Pattern:
    fields = tok.split(";")
    try:
        n = int(fields[0][2:])
    except ValueError:
        raise PatternError(f"line {lineno}: bad order in {tok!r}") from None
    if n < 1 or n > PATTERN_ORDER_CAP:
        raise PatternError(f"line {lineno}: pattern order {n} out of range")
    edges: list[tuple[int, int]] = []
    colour_map: dict[tuple[int, int], str] = {}
    for field in fields[1:]:
        if not field:
            continue
        try:
            pair, colour = field.split(":")
            u_s, v_s = pair.split("-")
            u, v = int(u_s), int(v_s)
        except ValueError:
            raise PatternError(f"line {lineno}: bad edge entry {field!r}") from None
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise PatternError(f"line {lineno}: edge {u}-{v} out of range")
        key = (min(u, v), max(u, v))
        if key in colour_map:
            raise PatternError(f"line {lineno}: duplicate edge {u}-{v}")
        if colour not in COLOURS[:k]:
            raise PatternError(f"line {lineno}: colour {colour!r} out of range for k={k}")
        edges.append(key)
        colour_map[key] = colour
    g = Graph(n, edges)
    return Pattern(g, tuple(colour_map[e] for e in g.edges()), k)


# ---------------------------------------------------------------------------
# Syntactic classification
# ---------------------------------------------------------------------------

def swap_colours(f: PatternSet) -> PatternSet:
    """Exchange red and blue in every member (an involution, k=2 only)."""
    if f.k != 2:
        raise PatternError("colour swap is defined for k=2 only")
    return PatternSet([p.swap() for p in f], 2)


def all_colourings_of(graph: Graph, k: int = 2) -> list[Pattern]:
    """One pattern per coloured-isomorphism class of k-colourings of graph."""
    seen = {}
    for colours in product(COLOURS[:k], repeat=len(graph.edges())):
        p = Pattern(graph, colours, k)
        seen.setdefault(p.canonical_key(), p)
    return list(seen.values())


def is_trivial_set(f: PatternSet) -> tuple[str, list[Graph]] | None:
    """Detect trivial sets: a witnessing colour c such that, per underlying
    graph, either every colouring of it is forbidden or its c-monochromatic
    colouring is not.

    Returns (witnessing colour, residual forbidden-graph family H) or None.
    H collects the underlying graphs all of whose colourings are members.
    """
    if f.k != 2:
        raise PatternError("trivial-set detection is defined for k=2 only")
    member_keys = {p.canonical_key() for p in f}
    classes = f.underlying_classes()
    all_in: list[Graph] = []
    partial: list[Graph] = []
    for g in classes.values():
        if all(p.canonical_key() in member_keys for p in all_colourings_of(g, 2)):
            all_in.append(g)
        else:
            partial.append(g)
    for colour in ("r", "b"):
        ok = True
        for g in partial:
            mono = Pattern(g, tuple([colour] * len(g.edges())), 2)
            if mono.canonical_key() in member_keys:
                ok = False
                break
        if ok:
            return colour, all_in
    return None


def is_universally_colourable(f: PatternSet) -> bool:
    """True iff every graph admits an f-free colouring: f has no edgeless
    member and, for some colour, no monochromatic member of that colour."""
    if f.k != 2:
        raise PatternError("universal-colourability test is defined for k=2 only")
    if any(p.is_edgeless() for p in f):
        return False
    return any(
        not any(p.is_monochromatic(c) for p in f) for c in ("r", "b")
    )


def universal_witness_colour(f: PatternSet) -> str | None:
    """A colour whose monochromatic colouring is f-free on every graph."""
    if any(p.is_edgeless() for p in f):
        return None
    for c in ("r", "b"):
        if not any(p.is_monochromatic(c) for p in f):
            return c
    return None


def expresses_finite_class(f: PatternSet) -> bool:
    """True iff f contains an edgeless pattern, a red complete pattern, and a
    blue complete pattern (so only finitely many graphs are colourable)."""
    if f.k != 2:
        raise PatternError("finite-class test is defined for k=2 only")
    has_edgeless = any(p.is_edgeless() for p in f)
    has_red = any(
        p.is_monochromatic("r") and _is_complete(p.graph) for p in f
    )
    has_blue = any(
        p.is_monochromatic("b") and _is_complete(p.graph) for p in f
    )
    return has_edgeless and has_red and has_blue


def _is_complete(g: Graph) -> bool:
    return g.edge_count() == g.n * (g.n - 1) // 2


# ---------------------------------------------------------------------------
# k-colour constructors
# ---------------------------------------------------------------------------

def build_Bbar(k: int) -> PatternSet:
    """All 2-edge-coloured graphs on k vertices without any blue edge."""
    if k < 1:
        raise PatternError(f"Bbar needs k >= 1, got {k}")
    if k > 6:
        raise UnsupportedSizeError(f"Bbar capped at k=6, got {k}")
    members = [
        Pattern(g, tuple(["r"] * len(g.edges())), 2)
        for g in enumerate_nonisomorphic_graphs(k)
    ]
    return PatternSet(members, 2)


def build_Lk(k: int) -> PatternSet:
    """Monochromatic 3-paths, two-coloured triangles, and the 4-vertex
    k-colourings with a vertex incident with three colours (and none of the
    smaller members induced)."""
    if k < 2:
        raise PatternError(f"Lk needs k >= 2, got {k}")
    if k > 3:
        raise UnsupportedSizeError(f"Lk capped at k=3 (three colour names), got {k}")
    palette = COLOURS[:k]
    members: list[Pattern] = []
    for c in palette:
        members.append(Pattern(_p3(), (c, c), k))
    for colours in product(palette, repeat=3):
        if len(set(colours)) == 2:
            members.append(Pattern(_k3(), colours, k))
    small = PatternSet(members, k)
    if k >= 3:
        from .oracle import verify_colouring

        for g in enumerate_nonisomorphic_graphs(4):
            if max((g.degree(v) for v in range(g.n)), default=0) < 3:
                continue
            for colours in product(palette, repeat=len(g.edges())):
                p = Pattern(g, colours, k)
                if not _has_tricoloured_vertex(p):
                    continue
                if not verify_colouring(g, EdgeColouring(g, colours, k), small):
                    continue
                members.append(p)
    return PatternSet(members, k)


def _has_tricoloured_vertex(p: Pattern) -> bool:
    incident: dict[int, set[str]] = {}
    for (u, v), c in zip(p.graph.edges(), p.colours):
        incident.setdefault(u, set()).add(c)
        incident.setdefault(v, set()).add(c)
    return any(len(cs) >= 3 for cs in incident.values())


def lift_graph(h: Graph, colour: str, k: int) -> PatternSet:
    """All k-edge-coloured graphs on h.order vertices whose colour subgraph in
    the given colour is isomorphic to h; forbidding them makes that colour
    class h-free."""
    if h.n > 4:
        raise UnsupportedSizeError(f"lift capped at 4-vertex graphs, got order {h.n}")
    if k > 3:
        raise UnsupportedSizeError(f"lift capped at k=3, got {k}")
    if colour not in COLOURS[:k]:
        raise PatternError(f"colour {colour!r} out of range for k={k}")
    h_key = canonical_form(h)
    members = []
    from .graphs import all_labelled_graphs

    for g in all_labelled_graphs(h.n):
        for colours in product(COLOURS[:k], repeat=len(g.edges())):
            p = Pattern(g, colours, k)
            if canonical_form(p.colour_subgraph(colour)) == h_key:
                members.append(p)
    return PatternSet(members, k)

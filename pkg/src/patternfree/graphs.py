"""Simple undirected graphs: representation, graph6 I/O, induced subgraphs,
bipartiteness, canonical forms, and isomorph-free enumeration.

Vertices are dense 0-indexed integers. Adjacency is stored as one bitmask per
vertex, which keeps subset and neighbourhood operations cheap at the small
orders this toolkit targets.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

CANONICAL_ORDER_CAP = 12
ENUMERATION_ORDER_CAP = 8
GRAPH6_ORDER_CAP = 62


class GraphError(ValueError):
    """Raised on malformed graph input or an out-of-range request."""


class UnsupportedSizeError(GraphError):
    """Raised when a graph exceeds the documented desk-scale guard."""


class Graph:
    """Immutable simple loopless undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj", "_edges", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for order {n}")
            if u == v:
                raise GraphError(f"loop at vertex {u} not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self._edges: tuple[tuple[int, int], ...] | None = None
        self._hash: int | None = None

    @classmethod
    def from_adj(cls, adj: Sequence[int]) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(adj)
        g._edges = None
        g._hash = None
        return g

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edge list in lexicographic order (min endpoint, then max)."""
        if self._edges is None:
            out = []
            for u in range(self.n):
                rest = self.adj[u] >> (u + 1)
                v = u + 1
                while rest:
                    if rest & 1:
                        out.append((u, v))
                    rest >>= 1
                    v += 1
            self._edges = tuple(out)
        return self._edges

    def edge_count(self) -> int:
        return sum(bin(a).count("1") for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def neighbours(self, v: int) -> Iterator[int]:
        return iter_bits(self.adj[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


COLOURS = ("r", "b", "g")
RED, BLUE, GREEN = COLOURS


class EdgeColouring:
    """Total map from the edges of a graph to colours, 'r' < 'b' (< 'g').

    Colours are stored as a tuple aligned with the graph's lexicographic
    edge order, which is also the tuple coding used by the boolean-CSP
    reduction.
    """

    __slots__ = ("graph", "k", "colours")

    def __init__(self, graph: Graph, colours: Sequence[str], k: int = 2):
        colours = tuple(colours)
        if k < 2 or k > len(COLOURS):
            raise GraphError(f"colour count must be 2 or 3, got {k}")
        if len(colours) != len(graph.edges()):
            raise GraphError(
                f"colouring has {len(colours)} entries for {len(graph.edges())} edges"
            )
        palette = COLOURS[:k]
        for c in colours:
            if c not in palette:
                raise GraphError(f"colour {c!r} out of range for k={k}")
        self.graph = graph
        self.k = k
        self.colours = colours

    @classmethod
    def from_map(cls, graph: Graph, mapping: dict[tuple[int, int], str], k: int = 2
                 ) -> "EdgeColouring":
        try:
            colours = [mapping[e] for e in graph.edges()]
        except KeyError as exc:
            raise GraphError(f"colouring missing edge {exc.args[0]}") from exc
        if len(mapping) != len(graph.edges()):
            raise GraphError("colouring keys do not match the graph's edge list")
        return cls(graph, colours, k)

    @classmethod
    def monochromatic(cls, graph: Graph, colour: str, k: int = 2) -> "EdgeColouring":
        return cls(graph, [colour] * len(graph.edges()), k)

    def colour_of(self, u: int, v: int) -> str:
        if u > v:
            u, v = v, u
        return self.colours[self.graph.edges().index((u, v))]

    def as_map(self) -> dict[tuple[int, int], str]:
        return dict(zip(self.graph.edges(), self.colours))

    def swap(self) -> "EdgeColouring":
        if self.k != 2:
            raise GraphError("colour swap is defined for k=2 only")
        flip = {"r": "b", "b": "r"}
        return EdgeColouring(self.graph, [flip[c] for c in self.colours], 2)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColouring):
            return NotImplemented
        return (self.graph, self.k, self.colours) == (other.graph, other.k, other.colours)

    def __hash__(self) -> int:
        return hash((self.graph, self.k, self.colours))

    def __repr__(self) -> str:
        return f"EdgeColouring({self.graph!r}, {''.join(self.colours)!r})"


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


# ---------------------------------------------------------------------------
# graph6 interchange
# ---------------------------------------------------------------------------

def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 line (orders up to 62)."""
    if isinstance(text, str):
        data = text.strip().encode("ascii")
    else:
        data = bytes(text).strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise GraphError("empty graph6 input")
    for off, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise GraphError(f"graph6 byte out of range at offset {off}: {byte}")
    n = data[0] - 63
    if n == 63:
        raise GraphError("graph6 orders above 62 are not supported (header byte 126)")
    body = data[1:]
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        raise GraphError(
            f"graph6 bit vector has {len(body)} bytes at offset 1, expected {nbytes}"
        )
    bits = 0
    for byte in body:
        bits = bits << 6 | (byte - 63)
    # drop the zero padding at the end of the last byte
    bits >>= nbytes * 6 - nbits
    adj = [0] * n
    pos = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if bits >> pos & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            pos -= 1
    return Graph.from_adj(adj)


def write_graph6(g: Graph) -> bytes:
    """Encode a graph as a graph6 byte string (orders up to 62)."""
    if g.n > GRAPH6_ORDER_CAP:
        raise UnsupportedSizeError(f"graph6 supports orders up to 62, got {g.n}")
    bits = 0
    nbits = 0
    for v in range(1, g.n):
        for u in range(v):
            bits = bits << 1 | (g.adj[u] >> v & 1)
            nbits += 1
    nbytes = (nbits + 5) // 6
    bits <<= nbytes * 6 - nbits
    out = bytearray([g.n + 63])
    for i in range(nbytes - 1, -1, -1):
        out.append((bits >> 6 * i & 63) + 63)
    return bytes(out)


def read_graph6_lines(text: str) -> list[Graph]:
    """Parse a multi-line graph6 document, one graph per non-empty line."""
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


# ---------------------------------------------------------------------------
# Elementary operations
# ---------------------------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph.from_adj([full & ~(g.adj[v] | 1 << v) for v in range(g.n)])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph under the order-preserving relabelling of vertices."""
    verts = sorted(set(vertices))
    for v in verts:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for order {g.n}")
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for i, u in enumerate(verts):
        for j in range(i + 1, len(verts)):
            if g.has_edge(u, verts[j]):
                adj[i] |= 1 << j
                adj[index[verts[j]]] |= 1 << i
    return Graph.from_adj(adj)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest member."""
    seen = 0
    comps = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = 1 << start
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= g.adj[v]
            frontier = grow & ~comp
            comp |= grow
        seen |= comp
        comps.append(frozenset(iter_bits(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_bipartite(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """BFS 2-colouring; returns a verified bipartition or None on an odd cycle."""
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for v in iter_bits(g.adj[u]):
                if side[v] == -1:
                    side[v] = side[u] ^ 1
                    queue.append(v)
                elif side[v] == side[u]:
                    return None
    left = frozenset(v for v in range(g.n) if side[v] == 0)
    right = frozenset(v for v in range(g.n) if side[v] == 1)
    for u, v in g.edges():
        assert (u in left) != (v in left), "bipartition check failed"
    return left, right


def is_complete(g: Graph) -> bool:
    return g.edge_count() == g.n * (g.n - 1) // 2


# ---------------------------------------------------------------------------
# Induced-subgraph containment
# ---------------------------------------------------------------------------

def induced_embeddings(g: Graph, h: Graph) -> Iterator[tuple[int, ...]]:
    """Yield vertex maps (image of h-vertex i at position i) with g[image] ≅ h.

    Backtracking mapper; every map is an isomorphism onto an induced
    subgraph.  Yields one map per (ordered) embedding.
    """
    if h.n > g.n:
        return
    hdeg = [h.degree(v) for v in range(h.n)]
    # match higher-degree pattern vertices first to prune early
    order = sorted(range(h.n), key=lambda v: -hdeg[v])
    pos_of = {v: i for i, v in enumerate(order)}
    image = [-1] * h.n
    used = 0

    def extend(ix: int) -> Iterator[tuple[int, ...]]:
        nonlocal used
        if ix == h.n:
            yield tuple(image)
            return
        hv = order[ix]
        for gv in range(g.n):
            if used >> gv & 1:
                continue
            ok = True
            for prev in order[:ix]:
                if h.has_edge(hv, prev) != g.has_edge(gv, image[prev]):
                    ok = False
                    break
            if ok:
                image[hv] = gv
                used |= 1 << gv
                yield from extend(ix + 1)
                used ^= 1 << gv
                image[hv] = -1

    yield from extend(0)
    del pos_of


def contains_induced(g: Graph, h: Graph) -> frozenset[int] | None:
    """First vertex subset of g inducing a copy of h, or None."""
    for image in induced_embeddings(g, h):
        return frozenset(image)
    return None


def induced_subsets(g: Graph, h: Graph) -> Iterator[tuple[int, ...]]:
    """Yield each vertex subset (sorted tuple) of g inducing h, once."""
    seen = set()
    for image in induced_embeddings(g, h):
        key = tuple(sorted(image))
        if key not in seen:
            seen.add(key)
            yield key


# ---------------------------------------------------------------------------
# Canonical forms and enumeration
# ---------------------------------------------------------------------------

def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbour counts into each cell."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        masks = [0] * len(cells)
        for i, cell in enumerate(cells):
            for v in cell:
                masks[i] |= 1 << v
        for i, cell in enumerate(cells):
            if len(cell) <= 1:
                continue
            sig = {}
            for v in cell:
                key = tuple(popcount(adj[v] & m) for m in masks)
                sig.setdefault(key, []).append(v)
            if len(sig) > 1:
                parts = [sig[k] for k in sorted(sig)]
                cells[i:i + 1] = parts
                changed = True
                break
    return cells


def _canon_key(adj: Sequence[int], n: int) -> tuple[int, ...]:
    """Smallest adjacency bit-vector over the refinement search tree."""
    best: list[tuple[int, ...]] = []

    def leaf_key(perm: Sequence[int]) -> tuple[int, ...]:
        # perm[i] = original vertex placed at position i
        pos = [0] * n
        for i, v in enumerate(perm):
            pos[v] = i
        key = []
        for i, v in enumerate(perm):
            row = 0
            m = adj[v]
            while m:
                low = m & -m
                row |= 1 << pos[low.bit_length() - 1]
                m ^= low
            key.append(row)
        return tuple(key)

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        target = None
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                target = i
                break
        if target is None:
            perm = [c[0] for c in cells]
            key = leaf_key(perm)
            if not best or key < best[0]:
                best[:] = [key]
            return
        cell = cells[target]
        for v in cell:
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    if n == 0:
        return ()
    search([list(range(n))])
    return best[0]


def canonical_form(g: Graph) -> bytes:
    """Canonical isomorphism key: graph6 of a canonical relabelling.

    Two graphs get equal keys iff they are isomorphic.  Capped at order 12;
    larger inputs fail loudly.
    """
    if g.n > CANONICAL_ORDER_CAP:
        raise UnsupportedSizeError(
            f"canonical form capped at order {CANONICAL_ORDER_CAP}, got {g.n}"
        )
    key = _canon_key(g.adj, g.n)
    return write_graph6(Graph.from_adj(key))


def canonical_graph(g: Graph) -> Graph:
    """A canonically labelled isomorph of g."""
    return parse_graph6(canonical_form(g))


def enumerate_nonisomorphic_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of graphs on n vertices.

    Built by extending the (n-1)-vertex classes with every possible new
    neighbourhood and deduplicating by canonical key.  0 <= n <= 8.
    """
    if not 0 <= n <= ENUMERATION_ORDER_CAP:
        raise GraphError(f"enumeration supported for 0 <= n <= 8, got {n}")
    if n == 0:
        yield Graph(0)
        return
    smaller = list(enumerate_nonisomorphic_graphs(n - 1))
    seen = set()
    for base in smaller:
        for nbhd in range(1 << (n - 1)):
            adj = list(base.adj) + [0]
            for v in iter_bits(nbhd):
                adj[v] |= 1 << (n - 1)
                adj[n - 1] |= 1 << v
            g = Graph.from_adj(adj)
            key = canonical_form(g)
            if key not in seen:
                seen.add(key)
                yield g


def all_labelled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on n vertices (2^C(n,2) of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in iter_bits(mask)])

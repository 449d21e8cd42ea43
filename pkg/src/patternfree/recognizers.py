"""Structural recognition of the hereditary classes expressible by small
pattern sets: the sixteen at-most-two-edge classes, the landscape of
both-monochromatic-path classes, and the Gallai graph construction."""

from __future__ import annotations

from enum import Enum
from itertools import combinations

from .graphs import (
    Graph,
    UnsupportedSizeError,
    canonical_form,
    complement,
    connected_components,
    contains_induced,
    induced_subgraph,
    is_bipartite,
    is_complete,
    iter_bits,
)
from .patterns import PatternSet, named, pattern_name, swap_colours
from .smallgraphs import cycle, k1_plus_p3

SEARCH_ORDER_CAP = 64


class ClassId(Enum):
    ALL = "ALL"
    COMPLETE_MULTIPARTITE = "COMPLETE_MULTIPARTITE"
    CLUSTER = "CLUSTER"
    NO_3K1 = "NO_3K1"
    COMPLETE_MINUS_MATCHING = "COMPLETE_MINUS_MATCHING"
    EMPTY_OR_COMPLETE = "EMPTY_OR_COMPLETE"
    AT_MOST_2_CLIQUES = "AT_MOST_2_CLIQUES"
    COMPLETE_OR_K2 = "COMPLETE_OR_K2"
    EMPTY_OR_COMPLETE_MINUS_MATCHING = "EMPTY_OR_COMPLETE_MINUS_MATCHING"
    K1P3_C5_FREE = "K1P3_C5_FREE"
    NO3K1_C5_FREE = "NO3K1_C5_FREE"
    JOIN_OF_CLUSTERS = "JOIN_OF_CLUSTERS"
    JOIN_OF_CLUSTERS_PARTS_LE2 = "JOIN_OF_CLUSTERS_PARTS_LE2"
    COBIP_OR_CLUSTER = "COBIP_OR_CLUSTER"
    CO_BIPARTITE = "CO_BIPARTITE"
    ELEMENTARY = "ELEMENTARY"
    LINE_OF_BIPARTITE = "LINE_OF_BIPARTITE"
    LINE_OF_INCIDENCE = "LINE_OF_INCIDENCE"
    LINE_OF_INCIDENCE_OR_DIAMOND_COMPONENTS = "LINE_OF_INCIDENCE_OR_DIAMOND_COMPONENTS"
    CHROM_INDEX_LE_2 = "CHROM_INDEX_LE_2"
    SMALL_COMPONENT_CATALOGUE_BTRT = "SMALL_COMPONENT_CATALOGUE_BTRT"
    SMALL_COMPONENT_CATALOGUE_BTRT_RBB = "SMALL_COMPONENT_CATALOGUE_BTRT_RBB"


# ---------------------------------------------------------------------------
# Gallai graph and elementary graphs
# ---------------------------------------------------------------------------

def gallai_graph(g: Graph) -> Graph:
    """Vertex per edge of g; two edges adjacent iff they induce a 3-path
    (shared endpoint, other endpoints non-adjacent)."""
    edges = g.edges()
    out = []
    for i, (a, b) in enumerate(edges):
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            shared = {a, b} & {c, d}
            if len(shared) != 1:
                continue
            (x,) = {a, b} - shared
            (y,) = {c, d} - shared
            if not g.has_edge(x, y):
                out.append((i, j))
    return Graph(len(edges), out)


def is_elementary(g: Graph) -> bool:
    """True iff the Gallai graph is bipartite."""
    return is_bipartite(gallai_graph(g)) is not None


def gallai_colouring(g: Graph) -> list[str]:
    """An edge colouring with no monochromatic induced 3-path, from a
    bipartition of the Gallai graph.  Caller must know g is elementary."""
    sides = is_bipartite(gallai_graph(g))
    if sides is None:
        raise ValueError("graph is not elementary")
    left, _ = sides
    return ["r" if i in left else "b" for i in range(len(g.edges()))]


# ---------------------------------------------------------------------------
# Forbidden-subgraph detectors
# ---------------------------------------------------------------------------

def has_claw(g: Graph) -> bool:
    for v in range(g.n):
        nbrs = list(iter_bits(g.adj[v]))
        for a, b, c in combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return True
    return False


def has_diamond(g: Graph) -> bool:
    for a, b in g.edges():
        common = list(iter_bits(g.adj[a] & g.adj[b]))
        for w, x in combinations(common, 2):
            if not g.has_edge(w, x):
                return True
    return False


def has_odd_hole(g: Graph) -> bool:
    """Chordless odd cycle on at least five vertices, by induced-path DFS.

    Exponential in the worst case; all callers run at desk scale.
    """
    n = g.n
    for start in range(n):
        # paths with minimum vertex `start`; on_path excludes start itself
        stack = [([start, v], 1 << v) for v in iter_bits(g.adj[start]) if v > start]
        while stack:
            path, on_path = stack.pop()
            last = path[-1]
            interior = on_path & ~(1 << last)
            for w in iter_bits(g.adj[last]):
                if w <= start or on_path >> w & 1:
                    continue
                if g.adj[w] & interior:
                    continue
                closes = g.has_edge(w, start)
                if closes:
                    if len(path) >= 4 and len(path) % 2 == 0:
                        return True
                    continue  # w would chord any longer cycle through start
                stack.append((path + [w], on_path | 1 << w))
    return False


def _triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for a, b in g.edges():
        for w in iter_bits(g.adj[a] & g.adj[b]):
            if w > b:
                out.append((a, b, w))
    return out


def has_even_butterfly(g: Graph) -> bool:
    """Induced two-triangles-joined-by-an-even-path (length 0 included)."""
    tris = _triangles(g)
    # shared-vertex case: plain butterfly
    for i, t1 in enumerate(tris):
        s1 = set(t1)
        for t2 in tris[i + 1:]:
            s2 = set(t2)
            shared = s1 & s2
            if len(shared) == 1:
                outer1 = s1 - shared
                outer2 = s2 - shared
                if not any(g.has_edge(u, v) for u in outer1 for v in outer2):
                    return True
    # disjoint triangles joined by an induced path of even length >= 2
    for i, t1 in enumerate(tris):
        s1 = set(t1)
        for t2 in tris[i + 1:]:
            s2 = set(t2)
            if s1 & s2:
                continue
            if any(g.has_edge(u, v) for u in s1 for v in s2):
                continue  # a length-1 bridge gives an odd butterfly, not even
            for h1 in t1:
                wings1 = s1 - {h1}
                for h2 in t2:
                    wings2 = s2 - {h2}
                    blocked = 0
                    for u in s1 | s2:
                        blocked |= 1 << u
                    forbidden_nbrs = 0
                    for u in wings1 | wings2:
                        forbidden_nbrs |= g.adj[u]
                    if _even_induced_path(g, h1, h2, blocked, forbidden_nbrs):
                        return True
    return False


def _even_induced_path(
    g: Graph, h1: int, h2: int, blocked: int, forbidden_nbrs: int
) -> bool:
    """Induced h1..h2 path of even length whose interior avoids `blocked`
    vertices and neighbours of `forbidden_nbrs` owners."""
    stack = []
    for w in iter_bits(g.adj[h1] & ~blocked & ~forbidden_nbrs):
        if g.has_edge(w, h2):
            continue  # would close at odd length 2? no: h1-w-h2 has length 2
        stack.append(([w], 1 << w))
    # handle length-2 closure directly: h1-w-h2 is even (length 2)
    for w in iter_bits(g.adj[h1] & g.adj[h2] & ~blocked & ~forbidden_nbrs):
        return True
    while stack:
        path, on_path = stack.pop()
        last = path[-1]
        interior = on_path & ~(1 << last)
        for w in iter_bits(g.adj[last] & ~blocked & ~forbidden_nbrs):
            if on_path >> w & 1 or g.has_edge(w, h1) or g.adj[w] & interior:
                continue
            if g.has_edge(w, h2):
                # path length = len(path)+2 edges
                if len(path) % 2 == 0:
                    return True
                continue
            stack.append((path + [w], on_path | 1 << w))
    return False


# ---------------------------------------------------------------------------
# Shape predicates
# ---------------------------------------------------------------------------

def is_cluster(g: Graph) -> bool:
    return all(
        is_complete(induced_subgraph(g, comp)) for comp in connected_components(g)
    )


def is_complete_multipartite(g: Graph) -> bool:
    return is_cluster(complement(g))


def multipartite_profile(g: Graph) -> list[int] | None:
    """Descending part sizes if g is complete multipartite, else None."""
    if not is_complete_multipartite(g):
        return None
    return sorted((len(c) for c in connected_components(complement(g))), reverse=True)


def is_co_bipartite(g: Graph) -> bool:
    return is_bipartite(complement(g)) is not None


def _degrees(g: Graph) -> list[int]:
    return sorted(g.degree(v) for v in range(g.n))


def _is_path_graph(g: Graph) -> bool:
    if g.n <= 1:
        return True
    degs = _degrees(g)
    return (
        g.edge_count() == g.n - 1
        and degs[-1] <= 2
        and len(connected_components(g)) == 1
    )


def _is_cycle_graph(g: Graph) -> bool:
    return (
        g.n >= 3
        and g.edge_count() == g.n
        and _degrees(g) == [2] * g.n
        and len(connected_components(g)) == 1
    )


def _is_tadpole(g: Graph) -> bool:
    """Triangle with a pendant path (tail length >= 1)."""
    if g.n < 4 or g.edge_count() != g.n:
        return False
    if _degrees(g) != [1] + [2] * (g.n - 2) + [3]:
        return False
    return len(connected_components(g)) == 1 and bool(_triangles(g))


def _dumbbell_length(g: Graph) -> int | None:
    """Path length k if g is two triangles joined by a path of length k."""
    if g.n == 5 and g.edge_count() == 6 and _degrees(g) == [2, 2, 2, 2, 4]:
        return 0
    if g.n < 6 or g.edge_count() != g.n + 1:
        return None
    if _degrees(g) != [2] * (g.n - 2) + [3, 3]:
        return None
    if len(connected_components(g)) != 1:
        return None
    tris = _triangles(g)
    if len(tris) != 2 or set(tris[0]) & set(tris[1]):
        return None
    return g.n - 5


def _catalogue_component_ok(g: Graph, allow_k5_and_even_dumbbells: bool) -> bool:
    """Connected g is an induced subgraph of the component catalogue: a small
    complete graph, the diamond, an even cycle, or a butterfly of the
    permitted parity (such induced pieces are completes, the diamond, paths,
    even cycles, triangle tadpoles, and the butterflies themselves)."""
    max_clique = 5 if allow_k5_and_even_dumbbells else 4
    if is_complete(g):
        return g.n <= max_clique
    if _is_path_graph(g):
        return True
    if _is_cycle_graph(g):
        return g.n % 2 == 0
    if g.n == 4 and g.edge_count() == 5 and _degrees(g) == [2, 2, 3, 3]:
        return True  # diamond
    if _is_tadpole(g):
        return True
    k = _dumbbell_length(g)
    if k is not None:
        return True if allow_k5_and_even_dumbbells else k % 2 == 1
    return False


# ---------------------------------------------------------------------------
# recognize
# ---------------------------------------------------------------------------

_SEARCH_GUARDED = {
    ClassId.K1P3_C5_FREE,
    ClassId.NO3K1_C5_FREE,
    ClassId.LINE_OF_BIPARTITE,
    ClassId.LINE_OF_INCIDENCE,
    ClassId.LINE_OF_INCIDENCE_OR_DIAMOND_COMPONENTS,
}


def recognize(class_id: ClassId, g: Graph) -> bool:
    """Membership of g in the named hereditary class."""
    if class_id in _SEARCH_GUARDED and g.n > SEARCH_ORDER_CAP:
        raise UnsupportedSizeError(
            f"{class_id.value} recognition guarded at order {SEARCH_ORDER_CAP}"
        )
    if class_id is ClassId.ALL:
        return True
    if class_id is ClassId.COMPLETE_MULTIPARTITE:
        return is_complete_multipartite(g)
    if class_id is ClassId.CLUSTER:
        return is_cluster(g)
    if class_id is ClassId.NO_3K1:
        return not _has_independent_triple(g)
    if class_id is ClassId.COMPLETE_MINUS_MATCHING:
        return _complement_max_degree(g) <= 1
    if class_id is ClassId.EMPTY_OR_COMPLETE:
        return g.edge_count() == 0 or is_complete(g)
    if class_id is ClassId.AT_MOST_2_CLIQUES:
        return is_cluster(g) and len(connected_components(g)) <= 2
    if class_id is ClassId.COMPLETE_OR_K2:
        return is_complete(g) or (g.n == 2 and g.edge_count() == 0)
    if class_id is ClassId.EMPTY_OR_COMPLETE_MINUS_MATCHING:
        return g.edge_count() == 0 or _complement_max_degree(g) <= 1
    if class_id is ClassId.K1P3_C5_FREE:
        return (
            contains_induced(g, k1_plus_p3()) is None
            and contains_induced(g, cycle(5)) is None
        )
    if class_id is ClassId.NO3K1_C5_FREE:
        return (
            not _has_independent_triple(g)
            and contains_induced(g, cycle(5)) is None
        )
    if class_id is ClassId.JOIN_OF_CLUSTERS:
        return all(
            is_complete_multipartite(induced_subgraph(complement(g), comp))
            for comp in connected_components(complement(g))
        )
    if class_id is ClassId.JOIN_OF_CLUSTERS_PARTS_LE2:
        for comp in connected_components(complement(g)):
            h = induced_subgraph(complement(g), comp)
            profile = multipartite_profile(h)
            if profile is None or len(profile) > 2:
                return False
        return True
    if class_id is ClassId.COBIP_OR_CLUSTER:
        return is_co_bipartite(g) or is_cluster(g)
    if class_id is ClassId.CO_BIPARTITE:
        return is_co_bipartite(g)
    if class_id is ClassId.ELEMENTARY:
        return is_elementary(g)
    if class_id is ClassId.LINE_OF_BIPARTITE:
        return not (has_claw(g) or has_diamond(g) or has_odd_hole(g))
    if class_id is ClassId.LINE_OF_INCIDENCE:
        return not (
            has_claw(g) or has_diamond(g) or has_odd_hole(g) or has_even_butterfly(g)
        )
    if class_id is ClassId.LINE_OF_INCIDENCE_OR_DIAMOND_COMPONENTS:
        for comp in connected_components(g):
            h = induced_subgraph(g, comp)
            if h.n == 4 and h.edge_count() == 5 and _degrees(h) == [2, 2, 3, 3]:
                continue
            if has_claw(h) or has_diamond(h) or has_odd_hole(h) or has_even_butterfly(h):
                return False
        return True
    if class_id is ClassId.CHROM_INDEX_LE_2:
        if any(g.degree(v) > 2 for v in range(g.n)):
            return False
        return all(
            not _is_cycle_graph(h) or h.n % 2 == 0
            for h in (induced_subgraph(g, c) for c in connected_components(g))
        )
    if class_id is ClassId.SMALL_COMPONENT_CATALOGUE_BTRT:
        return all(
            _catalogue_component_ok(induced_subgraph(g, c), True)
            for c in connected_components(g)
        )
    if class_id is ClassId.SMALL_COMPONENT_CATALOGUE_BTRT_RBB:
        return all(
            _catalogue_component_ok(induced_subgraph(g, c), False)
            for c in connected_components(g)
        )
    raise ValueError(f"unknown class id {class_id!r}")


def _has_independent_triple(g: Graph) -> bool:
    co = complement(g)
    return bool(_triangles(co))


def _complement_max_degree(g: Graph) -> int:
    co = complement(g)
    return max((co.degree(v) for v in range(co.n)), default=0)


# ---------------------------------------------------------------------------
# Pattern set -> class lookups
# ---------------------------------------------------------------------------

_PATH_BASE: dict[frozenset[str], ClassId] = {
    frozenset(): ClassId.ALL,
    frozenset({"rP3"}): ClassId.ALL,
    frozenset({"bP3"}): ClassId.ALL,
    frozenset({"rbP3"}): ClassId.ALL,
    frozenset({"rP3", "bP3"}): ClassId.ELEMENTARY,
    frozenset({"rP3", "rbP3"}): ClassId.ALL,
    frozenset({"bP3", "rbP3"}): ClassId.ALL,
    frozenset({"rP3", "bP3", "rbP3"}): ClassId.CLUSTER,
}

_SINGLE_CO_BASE: dict[frozenset[str], ClassId] = {
    frozenset({"rCoP3"}): ClassId.ALL,
    frozenset({"rCoP3", "rP3"}): ClassId.ALL,
    frozenset({"rCoP3", "bP3"}): ClassId.K1P3_C5_FREE,
    frozenset({"rCoP3", "rbP3"}): ClassId.ALL,
    frozenset({"rCoP3", "rP3", "bP3"}): ClassId.COBIP_OR_CLUSTER,
    frozenset({"rCoP3", "rP3", "rbP3"}): ClassId.ALL,
    frozenset({"rCoP3", "bP3", "rbP3"}): ClassId.JOIN_OF_CLUSTERS,
    frozenset({"rCoP3", "rP3", "bP3", "rbP3"}): ClassId.CLUSTER,
}

_INTERSECT_MULTIPARTITE: dict[ClassId, ClassId] = {
    ClassId.ALL: ClassId.COMPLETE_MULTIPARTITE,
    ClassId.COMPLETE_MULTIPARTITE: ClassId.COMPLETE_MULTIPARTITE,
    ClassId.CLUSTER: ClassId.EMPTY_OR_COMPLETE,
    ClassId.NO_3K1: ClassId.COMPLETE_MINUS_MATCHING,
    ClassId.COMPLETE_MINUS_MATCHING: ClassId.COMPLETE_MINUS_MATCHING,
    ClassId.EMPTY_OR_COMPLETE: ClassId.EMPTY_OR_COMPLETE,
    ClassId.AT_MOST_2_CLIQUES: ClassId.COMPLETE_OR_K2,
    ClassId.COMPLETE_OR_K2: ClassId.COMPLETE_OR_K2,
    ClassId.EMPTY_OR_COMPLETE_MINUS_MATCHING: ClassId.EMPTY_OR_COMPLETE_MINUS_MATCHING,
    ClassId.K1P3_C5_FREE: ClassId.COMPLETE_MULTIPARTITE,
    ClassId.NO3K1_C5_FREE: ClassId.COMPLETE_MINUS_MATCHING,
    ClassId.JOIN_OF_CLUSTERS: ClassId.COMPLETE_MULTIPARTITE,
    ClassId.JOIN_OF_CLUSTERS_PARTS_LE2: ClassId.COMPLETE_MINUS_MATCHING,
    ClassId.COBIP_OR_CLUSTER: ClassId.EMPTY_OR_COMPLETE_MINUS_MATCHING,
    ClassId.CO_BIPARTITE: ClassId.COMPLETE_MINUS_MATCHING,
    ClassId.ELEMENTARY: ClassId.EMPTY_OR_COMPLETE_MINUS_MATCHING,
}

_INTERSECT_NO3K1: dict[ClassId, ClassId] = {
    ClassId.ALL: ClassId.NO_3K1,
    ClassId.COMPLETE_MULTIPARTITE: ClassId.COMPLETE_MINUS_MATCHING,
    ClassId.CLUSTER: ClassId.AT_MOST_2_CLIQUES,
    ClassId.NO_3K1: ClassId.NO_3K1,
    ClassId.COMPLETE_MINUS_MATCHING: ClassId.COMPLETE_MINUS_MATCHING,
    ClassId.EMPTY_OR_COMPLETE: ClassId.COMPLETE_OR_K2,
    ClassId.AT_MOST_2_CLIQUES: ClassId.AT_MOST_2_CLIQUES,
    ClassId.COMPLETE_OR_K2: ClassId.COMPLETE_OR_K2,
    ClassId.EMPTY_OR_COMPLETE_MINUS_MATCHING: ClassId.COMPLETE_MINUS_MATCHING,
    ClassId.K1P3_C5_FREE: ClassId.NO3K1_C5_FREE,
    ClassId.NO3K1_C5_FREE: ClassId.NO3K1_C5_FREE,
    ClassId.JOIN_OF_CLUSTERS: ClassId.JOIN_OF_CLUSTERS_PARTS_LE2,
    ClassId.JOIN_OF_CLUSTERS_PARTS_LE2: ClassId.JOIN_OF_CLUSTERS_PARTS_LE2,
    ClassId.COBIP_OR_CLUSTER: ClassId.CO_BIPARTITE,
    ClassId.CO_BIPARTITE: ClassId.CO_BIPARTITE,
    ClassId.ELEMENTARY: ClassId.CO_BIPARTITE,
}


def two_edge_class_of(f: PatternSet) -> ClassId:
    """Class expressed by a set of three-vertex patterns with at most two
    edges: base table on the path part, then intersection rules for the
    edgeless pattern and the pair of one-edge patterns."""
    if f.k != 2:
        raise ValueError("two-edge classification is defined for k=2 only")
    names = set()
    for p in f:
        if p.graph.n != 3 or len(p.colours) > 2:
            raise ValueError(
                "two-edge classification needs three-vertex patterns "
                "with at most two edges"
            )
        names.add(pattern_name(p))
    if "bCoP3" in names and "rCoP3" not in names:
        names = {_SWAP_NAME[n] for n in names}
    has_3k1 = "3K1" in names
    both_co = {"rCoP3", "bCoP3"} <= names
    paths = frozenset(names & {"rP3", "bP3", "rbP3"})
    if "rCoP3" in names and not both_co:
        base = _SINGLE_CO_BASE[frozenset(paths | {"rCoP3"})]
    else:
        base = _PATH_BASE[paths]
    if both_co:
        base = _INTERSECT_MULTIPARTITE[base]
    if has_3k1:
        base = _INTERSECT_NO3K1[base]
    return base


_SWAP_NAME = {
    "3K1": "3K1", "rCoP3": "bCoP3", "bCoP3": "rCoP3",
    "rP3": "bP3", "bP3": "rP3", "rbP3": "rbP3",
    "rK3": "bK3", "bK3": "rK3", "rrbK3": "rbbK3", "rbbK3": "rrbK3",
}

_LANDSCAPE_SETS: list[tuple[frozenset[str], ClassId]] = [
    (frozenset({"rP3", "bP3", "rrbK3", "rbbK3"}), ClassId.LINE_OF_BIPARTITE),
    (frozenset({"rP3", "bP3", "bK3", "rrbK3", "rbbK3"}), ClassId.LINE_OF_INCIDENCE),
    (frozenset({"rP3", "bP3", "bK3", "rbbK3"}),
     ClassId.LINE_OF_INCIDENCE_OR_DIAMOND_COMPONENTS),
    (frozenset({"rP3", "bP3", "rK3", "bK3", "rrbK3", "rbbK3"}),
     ClassId.CHROM_INDEX_LE_2),
    (frozenset({"rP3", "bP3", "rK3", "bK3"}),
     ClassId.SMALL_COMPONENT_CATALOGUE_BTRT),
    (frozenset({"rP3", "bP3", "rK3", "bK3", "rbbK3"}),
     ClassId.SMALL_COMPONENT_CATALOGUE_BTRT_RBB),
]

_CO_BIP_CORE = frozenset({"3K1", "rP3", "bP3"})
_CO_BIP_RANGE = frozenset({"3K1", "rCoP3", "rP3", "bP3", "rK3", "rbbK3"})


def structural_match(f: PatternSet) -> ClassId | None:
    """ClassId of a registered expressing set matching f (after colour
    normalization), or None."""
    if f.k != 2:
        return None
    names = set()
    for p in f:
        name = pattern_name(p)
        if name is None:
            return None
        names.add(name)
    if all(n in {"3K1", "rCoP3", "bCoP3", "rP3", "bP3", "rbP3"} for n in names):
        return two_edge_class_of(f)
    for cand in (frozenset(names), frozenset(_SWAP_NAME[n] for n in names)):
        for key, class_id in _LANDSCAPE_SETS:
            if cand == key:
                return class_id
        if _CO_BIP_CORE <= cand <= _CO_BIP_RANGE:
            return ClassId.CO_BIPARTITE
    return None


# ---------------------------------------------------------------------------
# Registry of expressing sets (used by the differential test suites)
# ---------------------------------------------------------------------------

def registered_expressing_sets() -> list[tuple[PatternSet, ClassId]]:
    """Pattern sets paired with the class they express."""
    pairs = [
        (named("rCoP3"), ClassId.ALL),
        (named("rP3", "rbP3"), ClassId.ALL),
        (named("rCoP3", "bCoP3"), ClassId.COMPLETE_MULTIPARTITE),
        (named("rP3", "bP3", "rbP3"), ClassId.CLUSTER),
        (named("3K1"), ClassId.NO_3K1),
        (named("3K1", "rCoP3", "bCoP3"), ClassId.COMPLETE_MINUS_MATCHING),
        (named("rCoP3", "bCoP3", "rP3", "bP3", "rbP3"), ClassId.EMPTY_OR_COMPLETE),
        (named("3K1", "rP3", "bP3", "rbP3"), ClassId.AT_MOST_2_CLIQUES),
        (named("3K1", "rCoP3", "bCoP3", "rP3", "bP3", "rbP3"), ClassId.COMPLETE_OR_K2),
        (named("rCoP3", "bCoP3", "rP3", "bP3"),
         ClassId.EMPTY_OR_COMPLETE_MINUS_MATCHING),
        (named("bCoP3", "rP3"), ClassId.K1P3_C5_FREE),
        (named("rCoP3", "bP3"), ClassId.K1P3_C5_FREE),
        (named("3K1", "bCoP3", "rP3"), ClassId.NO3K1_C5_FREE),
        (named("bCoP3", "rP3", "rbP3"), ClassId.JOIN_OF_CLUSTERS),
        (named("3K1", "bCoP3", "rP3", "rbP3"), ClassId.JOIN_OF_CLUSTERS_PARTS_LE2),
        (named("bCoP3", "rP3", "bP3"), ClassId.COBIP_OR_CLUSTER),
        (named("3K1", "rP3", "bP3"), ClassId.CO_BIPARTITE),
        (named("3K1", "rP3", "bP3", "rK3", "rbbK3"), ClassId.CO_BIPARTITE),
        (named("3K1", "rCoP3", "rP3", "bP3", "rK3"), ClassId.CO_BIPARTITE),
        (named("rP3", "bP3"), ClassId.ELEMENTARY),
        (named("rP3", "bP3", "rrbK3", "rbbK3"), ClassId.LINE_OF_BIPARTITE),
        (named("rP3", "bP3", "bK3", "rrbK3", "rbbK3"), ClassId.LINE_OF_INCIDENCE),
        (named("rP3", "bP3", "rK3", "rrbK3", "rbbK3"), ClassId.LINE_OF_INCIDENCE),
        (named("rP3", "bP3", "bK3", "rbbK3"),
         ClassId.LINE_OF_INCIDENCE_OR_DIAMOND_COMPONENTS),
        (named("rP3", "bP3", "rK3", "rrbK3"),
         ClassId.LINE_OF_INCIDENCE_OR_DIAMOND_COMPONENTS),
        (named("rP3", "bP3", "rK3", "bK3", "rrbK3", "rbbK3"),
         ClassId.CHROM_INDEX_LE_2),
        (named("rP3", "bP3", "rK3", "bK3"), ClassId.SMALL_COMPONENT_CATALOGUE_BTRT),
        (named("rP3", "bP3", "rK3", "bK3", "rbbK3"),
         ClassId.SMALL_COMPONENT_CATALOGUE_BTRT_RBB),
        (named("rP3", "bP3", "rK3", "bK3", "rrbK3"),
         ClassId.SMALL_COMPONENT_CATALOGUE_BTRT_RBB),
    ]
    return pairs


def swap_class(class_id: ClassId) -> ClassId:
    """Colour-dual of a class (all the registered classes are self-dual)."""
    return class_id


__all__ = [
    "ClassId",
    "gallai_graph",
    "gallai_colouring",
    "is_elementary",
    "recognize",
    "two_edge_class_of",
    "structural_match",
    "registered_expressing_sets",
    "has_claw",
    "has_diamond",
    "has_odd_hole",
    "has_even_butterfly",
    "is_cluster",
    "is_complete_multipartite",
    "multipartite_profile",
    "is_co_bipartite",
]

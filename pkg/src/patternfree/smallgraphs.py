"""Named small graphs used by recognizers and tests."""

from __future__ import annotations

from .graphs import Graph


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(sizes: list[int]) -> Graph:
    n = sum(sizes)
    part = []
    for i, s in enumerate(sizes):
        part.extend([i] * s)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]]
    return Graph(n, edges)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = list(a.edges()) + [(u + a.n, v + a.n) for u, v in b.edges()]
    return Graph(a.n + b.n, edges)


def join(a: Graph, b: Graph) -> Graph:
    g = disjoint_union(a, b)
    edges = list(g.edges()) + [(u, v + a.n) for u in range(a.n) for v in range(b.n)]
    return Graph(g.n, edges)


def claw() -> Graph:
    return Graph(4, [(0, 1), (0, 2), (0, 3)])


def paw() -> Graph:
    return Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])


def diamond() -> Graph:
    return Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])


def gem() -> Graph:
    return join(path(4), Graph(1))


def house() -> Graph:
    return Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)])


def bull() -> Graph:
    return Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])


def co_p3() -> Graph:
    """One edge plus an isolated vertex (complement of the 3-path)."""
    return Graph(3, [(0, 1)])


def k1_plus_p3() -> Graph:
    """Disjoint union of an isolated vertex and a 3-path."""
    return disjoint_union(Graph(1), path(3))


def n_butterfly(k: int) -> Graph:
    """Two triangles joined by a path of length k (k = 0: shared vertex)."""
    if k < 0:
        raise ValueError("butterfly path length must be non-negative")
    if k == 0:
        return Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (2, 4), (3, 4)])
    # triangle {0,1,2} hinged at 2, path 2..2+k, triangle at the far end
    h2 = 2 + k
    edges = [(0, 1), (0, 2), (1, 2)]
    edges += [(i, i + 1) for i in range(2, h2)]
    edges += [(h2, h2 + 1), (h2, h2 + 2), (h2 + 1, h2 + 2)]
    return Graph(h2 + 3, edges)


def butterfly() -> Graph:
    return n_butterfly(0)


def tadpole(tail: int) -> Graph:
    """Triangle with a pendant path of `tail` edges."""
    edges = [(0, 1), (1, 2), (2, 0)]
    edges += [(2 + i, 3 + i) for i in range(tail)]
    return Graph(3 + tail, edges)


def hajos() -> Graph:
    """Triangle with one extra vertex on each edge (the pyramid)."""
    return Graph(6, [(0, 1), (1, 2), (0, 3), (1, 3), (1, 4), (2, 4),
                     (3, 4), (3, 5), (4, 5)])


def lighthouse() -> Graph:
    return Graph(7, [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3), (2, 4), (2, 5),
                     (3, 5), (4, 5), (4, 6), (5, 6)])


def mausoleum() -> Graph:
    return Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (5, 6), (1, 5), (2, 5),
                     (2, 6), (3, 6)])


def garden() -> Graph:
    return Graph(7, [(0, 1), (0, 2), (2, 3), (1, 3), (0, 5), (1, 5), (2, 5),
                     (3, 5), (0, 4), (2, 4), (1, 6), (3, 6)])


def colossus() -> Graph:
    g = garden()
    return Graph(7, list(g.edges()) + [(1, 2)])


def five_wonders() -> dict[str, Graph]:
    """The five minimal non-elementary obstructions beyond claw and odd holes."""
    return {
        "hajos": hajos(),
        "lighthouse": lighthouse(),
        "mausoleum": mausoleum(),
        "garden": garden(),
        "colossus": colossus(),
    }

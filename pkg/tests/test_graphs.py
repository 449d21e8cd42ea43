"""Graph substrate: graph6 I/O, induced machinery, bipartiteness, canonical
forms, and isomorph-free enumeration."""

from itertools import combinations

import pytest

from conftest import graphs_of_order
from patternfree.graphs import (
    Graph,
    GraphError,
    UnsupportedSizeError,
    all_labelled_graphs,
    canonical_form,
    complement,
    connected_components,
    contains_induced,
    enumerate_nonisomorphic_graphs,
    induced_subgraph,
    is_bipartite,
    parse_graph6,
    write_graph6,
)
from patternfree.smallgraphs import (
    butterfly,
    claw,
    complete,
    cycle,
    diamond,
    empty_graph,
    gem,
    path,
)


class TestGraph6:
    def test_single_vertex(self):
        g = parse_graph6("@")
        assert g.n == 1 and g.edge_count() == 0

    def test_k2(self):
        g = parse_graph6("A_")
        assert g.n == 2 and g.edges() == ((0, 1),)
        assert write_graph6(g) == b"A_"

    def test_hand_decoded_five_vertex(self):
        # header 'D' = 5 vertices; bytes '?','{' decode to the star K_{1,4}
        g = parse_graph6("D?{")
        assert g.n == 5
        assert set(g.edges()) == {(0, 4), (1, 4), (2, 4), (3, 4)}

    def test_matches_independent_decoder(self):
        nx = pytest.importorskip("networkx")
        for n in range(1, 7):
            for g in graphs_of_order(n):
                data = write_graph6(g)
                other = nx.from_graph6_bytes(data)
                edges = {(min(e), max(e)) for e in other.edges()}
                assert edges == set(g.edges())

    @pytest.mark.parametrize("n", range(0, 8))
    def test_round_trip(self, n):
        for g in graphs_of_order(n):
            assert parse_graph6(write_graph6(g)) == g

    @pytest.mark.slow
    def test_round_trip_order_8(self):
        count = 0
        for g in enumerate_nonisomorphic_graphs(8):
            assert parse_graph6(write_graph6(g)) == g
            count += 1
        assert count == 12346

    def test_malformed_inputs(self):
        with pytest.raises(GraphError, match="offset"):
            parse_graph6(bytes([70, 10]))
        with pytest.raises(GraphError):
            parse_graph6("D?")  # truncated bit vector
        with pytest.raises(GraphError):
            parse_graph6("")
        with pytest.raises(UnsupportedSizeError):
            write_graph6(Graph(63))


class TestBasics:
    def test_complement_3k1(self):
        assert complement(empty_graph(3)) == complete(3)

    def test_complement_involution(self, graphs_up_to_6):
        for g in graphs_up_to_6:
            assert complement(complement(g)) == g

    def test_complement_p3(self):
        co = complement(path(3))
        assert co.edge_count() == 1 and co.has_edge(0, 2)

    def test_induced_subgraph(self):
        assert induced_subgraph(complete(4), [0, 1, 3]) == complete(3)
        assert induced_subgraph(diamond(), range(4)) == diamond()
        # the two degree-2 vertices of the diamond plus one degree-3 vertex
        d = diamond()
        deg2 = [v for v in range(4) if d.degree(v) == 2]
        deg3 = [v for v in range(4) if d.degree(v) == 3]
        sub = induced_subgraph(d, deg2 + deg3[:1])
        assert sorted(sub.degree(v) for v in range(3)) == [1, 1, 2]

    def test_induced_subgraph_range_error(self):
        with pytest.raises(GraphError):
            induced_subgraph(complete(3), [0, 5])

    def test_contains_induced(self):
        assert contains_induced(gem(), path(4)) is not None
        assert contains_induced(complete(4), path(3)) is None
        witness = contains_induced(claw(), empty_graph(3))
        assert witness is not None and 0 not in witness  # the three leaves

    def test_contains_induced_matches_naive(self):
        hosts = graphs_of_order(5)
        needles = graphs_of_order(3) + graphs_of_order(4)
        for g in hosts[::3]:
            for h in needles:
                naive = any(
                    induced_is_isomorphic(induced_subgraph(g, s), h)
                    for s in combinations(range(g.n), h.n)
                )
                assert (contains_induced(g, h) is not None) == naive

    def test_connected_components(self):
        two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        comps = connected_components(two_triangles)
        assert sorted(len(c) for c in comps) == [3, 3]
        assert len(connected_components(butterfly())) == 1

    def test_bipartite(self):
        assert is_bipartite(cycle(5)) is None
        assert is_bipartite(cycle(6)) is not None
        left, right = is_bipartite(claw())
        assert {len(left), len(right)} == {1, 3}

    def test_bipartite_iff_no_odd_cycle(self, graphs_up_to_6):
        for g in graphs_up_to_6:
            assert (is_bipartite(g) is not None) == (not _has_odd_cycle_naive(g))


def induced_is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    return canonical_form(a) == canonical_form(b)


def _has_odd_cycle_naive(g: Graph) -> bool:
    # exhaustive search over vertex sequences of odd length
    from itertools import permutations

    for length in range(3, g.n + 1, 2):
        for verts in permutations(range(g.n), length):
            if all(
                g.has_edge(verts[i], verts[(i + 1) % length])
                for i in range(length)
            ):
                return True
    return False


class TestCanonicalForm:
    def test_isomorphs_collide(self):
        a = Graph(3, [(0, 1), (1, 2)])
        b = Graph(3, [(1, 0), (0, 2)])
        assert canonical_form(a) == canonical_form(b)

    def test_distinct_graphs_differ(self):
        assert canonical_form(complete(3)) != canonical_form(path(3))

    def test_labelled_four_vertex_classes(self):
        keys = {canonical_form(g) for g in all_labelled_graphs(4)}
        assert len(keys) == 11

    def test_cap(self):
        with pytest.raises(UnsupportedSizeError):
            canonical_form(Graph(13))


class TestEnumeration:
    @pytest.mark.parametrize(
        "n,count", [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)]
    )
    def test_counts(self, n, count):
        assert len(graphs_of_order(n)) == count

    def test_pairwise_distinct_keys(self):
        for n in range(7):
            keys = [canonical_form(g) for g in graphs_of_order(n)]
            assert len(keys) == len(set(keys))

    def test_covers_labelled_enumeration(self):
        for n in range(6):
            enumerated = {canonical_form(g) for g in graphs_of_order(n)}
            labelled = {canonical_form(g) for g in all_labelled_graphs(n)}
            assert enumerated == labelled

    def test_out_of_range(self):
        with pytest.raises(GraphError):
            list(enumerate_nonisomorphic_graphs(9))

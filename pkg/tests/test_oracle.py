"""Ground-truth oracle: verification, search, counting, and its structural
properties (soundness, completeness at small scale, hereditarity,
monotonicity, colour-swap duality)."""

from itertools import product

import pytest

from patternfree.graphs import EdgeColouring, GraphError, UnsupportedSizeError
from patternfree.oracle import (
    admits_colouring,
    count_colourings,
    free_colourings_of,
    verify_colouring,
)
from patternfree.patterns import PatternSet, named, swap_colours
from patternfree.smallgraphs import (
    claw,
    complete,
    cycle,
    diamond,
    empty_graph,
    path,
)


class TestVerify:
    def test_diamond_alternating_plus_red_chord(self):
        d = diamond()  # edges (0,1),(0,2),(0,3),(1,2),(2,3); chord = (0,2)
        colours = {(0, 1): "r", (1, 2): "b", (2, 3): "r", (0, 3): "b",
                   (0, 2): "r"}
        c = EdgeColouring.from_map(d, colours)
        assert verify_colouring(d, c, named("bP3", "rP3", "bK3", "rbbK3"))

    def test_all_red_triangle(self):
        k3 = complete(3)
        c = EdgeColouring.monochromatic(k3, "r")
        assert not verify_colouring(k3, c, named("rK3"))

    def test_k5_two_five_cycles(self):
        k5 = complete(5)
        ring = {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}
        c = EdgeColouring.from_map(
            k5, {e: ("r" if e in ring else "b") for e in k5.edges()}
        )
        assert verify_colouring(k5, c, named("rK3", "bK3"))
        # ...but that colouring contains the one-red-two-blue triangle
        assert not verify_colouring(k5, c, named("rK3", "bK3", "rbbK3"))

    def test_mismatched_graph_rejected(self):
        c = EdgeColouring.monochromatic(complete(3), "r")
        with pytest.raises(GraphError):
            verify_colouring(complete(4), c, named("rK3"))

    def test_edgeless_pattern_checks_underlying_graph(self):
        c = EdgeColouring(empty_graph(3), [])
        assert not verify_colouring(empty_graph(3), c, named("3K1"))


class TestAdmits:
    def test_claw_and_c5_not_elementary(self):
        f = named("rP3", "bP3")
        assert admits_colouring(claw(), f) is None
        assert admits_colouring(cycle(5), f) is None

    def test_k6_ramsey(self):
        assert admits_colouring(complete(6), named("rK3", "bK3")) is None
        assert admits_colouring(complete(5), named("rK3", "bK3")) is not None

    def test_k5_with_mixed_triangle(self):
        assert admits_colouring(complete(5), named("rK3", "bK3", "rbbK3")) is None
        assert admits_colouring(complete(4), named("rK3", "bK3", "rbbK3")) is not None

    def test_universal_sets(self, graphs_up_to_5):
        f = named("rP3", "rbP3")
        for g in graphs_up_to_5:
            w = admits_colouring(g, f)
            assert w is not None and w.checked

    def test_witness_soundness(self, graphs_up_to_5):
        for f in (named("rP3", "bP3"), named("rK3", "bK3"), named("3K1", "rP3", "bP3")):
            for g in graphs_up_to_5:
                w = admits_colouring(g, f)
                if w is not None:
                    assert verify_colouring(g, w.colouring, f)

    def test_guard(self):
        with pytest.raises(UnsupportedSizeError):
            admits_colouring(empty_graph(15), named("rP3"))
        assert admits_colouring(empty_graph(15), named("rP3"), force=True)

    def test_determinism(self):
        f = named("rP3", "bP3", "rK3")
        a = admits_colouring(cycle(6), f)
        b = admits_colouring(cycle(6), f)
        assert a.colouring == b.colouring


class TestCompleteness:
    def _naive(self, g, f):
        for colours in product("rb", repeat=len(g.edges())):
            if verify_colouring(g, EdgeColouring(g, colours), f):
                return colours
        return None

    def test_matches_naive_enumeration(self, graphs_up_to_5):
        import random

        rng = random.Random(7)
        atoms = [
            "3K1", "rCoP3", "bCoP3", "rP3", "bP3", "rbP3", "rK3", "bK3",
            "rrbK3", "rbbK3",
        ]
        sets = [named("rP3", "bP3"), named("rK3", "bK3", "rbbK3"),
                named("3K1", "rCoP3")]
        for _ in range(12):
            size = rng.randint(1, 4)
            sets.append(named(*rng.sample(atoms, size)))
        for f in sets:
            for g in graphs_up_to_5:
                naive = self._naive(g, f)
                got = admits_colouring(g, f)
                assert (got is not None) == (naive is not None)
                if got is not None:
                    # the propagating search returns the lexicographically
                    # least witness, exactly what naive enumeration finds
                    assert tuple(got.colouring.colours) == naive

    def test_hereditary(self, graphs_up_to_5):
        from itertools import combinations

        from patternfree.graphs import induced_subgraph

        f = named("rP3", "bP3", "bK3")
        for g in graphs_up_to_5:
            if admits_colouring(g, f) is None:
                continue
            for r in range(g.n):
                for subset in combinations(range(g.n), r):
                    h = induced_subgraph(g, subset)
                    assert admits_colouring(h, f) is not None

    def test_monotone_in_pattern_set(self, graphs_up_to_5):
        small = named("rK3", "bK3")
        large = named("rK3", "bK3", "rbbK3")
        for g in graphs_up_to_5:
            if admits_colouring(g, large) is not None:
                assert admits_colouring(g, small) is not None

    def test_colour_swap_duality(self, graphs_up_to_5):
        for f in (named("rP3", "rK3"), named("rCoP3", "bP3", "bK3")):
            dual = swap_colours(f)
            for g in graphs_up_to_5:
                assert (admits_colouring(g, f) is None) == (
                    admits_colouring(g, dual) is None
                )


class TestCounting:
    def test_k3_without_monochromatic_triangles(self):
        assert count_colourings(complete(3), named("rK3", "bK3")) == 6

    def test_k2_no_embeddable_pattern(self):
        assert count_colourings(complete(2), named("rP3")) == 2

    def test_p3_everything_forbidden(self):
        assert count_colourings(path(3), named("rP3", "bP3", "rbP3")) == 0

    def test_matches_naive(self, graphs_up_to_5):
        for f in (named("rP3", "bP3"), named("rK3"), named("3K1")):
            for g in graphs_up_to_5[::4]:
                naive = sum(
                    1
                    for colours in product("rb", repeat=len(g.edges()))
                    if verify_colouring(g, EdgeColouring(g, colours), f)
                )
                assert count_colourings(g, f) == naive

    def test_guard(self):
        with pytest.raises(UnsupportedSizeError):
            count_colourings(empty_graph(9), named("rP3"))


class TestFreeColourings:
    def test_labelled_p3(self):
        assert free_colourings_of(path(3), named("rP3", "bP3")) == {
            ("r", "b"), ("b", "r")
        }

    def test_labelled_k3(self):
        tuples = free_colourings_of(complete(3), named("rK3", "rbbK3"))
        assert ("b", "b", "b") in tuples
        assert {t for t in tuples if t.count("r") == 2} == {
            ("r", "r", "b"), ("r", "b", "r"), ("b", "r", "r")
        }
        assert ("r", "r", "r") not in tuples

    def test_empty_pattern_set(self):
        assert len(free_colourings_of(complete(3), PatternSet([], 2))) == 8

"""Pattern values, set canonicalization, the syntactic lemmas, and the
multi-colour constructors."""

from itertools import product

import pytest

from patternfree.graphs import Graph
from patternfree.patterns import (
    CATALOGUE,
    Pattern,
    PatternError,
    PatternSet,
    all_colourings_of,
    build_Bbar,
    build_Lk,
    expresses_finite_class,
    is_trivial_set,
    is_universally_colourable,
    lift_graph,
    named,
    parse_pattern_set,
    pattern_name,
    swap_colours,
)
from patternfree.smallgraphs import co_p3, complete, empty_graph, path


class TestCatalogue:
    def test_ten_atoms_pairwise_distinct(self):
        keys = {p.canonical_key() for p in CATALOGUE.values()}
        assert len(keys) == 10

    def test_catalogue_covers_all_three_vertex_patterns(self):
        # brute enumeration of all 2-edge-colourings of all 3-vertex graphs
        seen = set()
        for graph in (empty_graph(3), co_p3(), path(3), complete(3)):
            for colours in product("rb", repeat=len(graph.edges())):
                seen.add(Pattern(graph, colours).canonical_key())
        assert seen == {p.canonical_key() for p in CATALOGUE.values()}

    def test_names_round_trip(self):
        for name, p in CATALOGUE.items():
            assert pattern_name(p) == name


class TestParsing:
    def test_named_atoms(self):
        f = parse_pattern_set("rP3 bP3")
        assert f == named("rP3", "bP3")

    def test_inline_alias(self):
        f = parse_pattern_set("n=3;0-1:r;0-2:r")
        assert f == named("rP3")

    def test_dedup(self):
        assert len(parse_pattern_set("rP3 rP3")) == 1

    def test_k_directive(self):
        f = parse_pattern_set("k=3 n=3;0-1:g;0-2:g")
        assert f.k == 3 and len(f) == 1

    @pytest.mark.parametrize(
        "text,message",
        [
            ("noSuch", "unknown pattern"),
            ("n=3;0-1:r;1-0:b", "duplicate edge"),
            ("n=3;0-1:g", "colour"),
            ("n=3;0-5:r", "out of range"),
            ("rP3 k=3", "must come first"),
        ],
    )
    def test_parse_errors(self, text, message):
        with pytest.raises(PatternError, match=message):
            parse_pattern_set(text)

    def test_error_carries_line_number(self):
        with pytest.raises(PatternError, match="line 2"):
            parse_pattern_set("rP3\nbogus")


class TestSwap:
    def test_simple(self):
        assert swap_colours(named("rP3")) == named("bP3")

    def test_table_caption_pair(self):
        assert swap_colours(named("rK3", "rrbK3")) == named("bK3", "rbbK3")

    def test_involution(self):
        for f in (named("rP3", "bK3"), named("3K1", "rCoP3", "rbP3")):
            assert swap_colours(swap_colours(f)) == f

    def test_preserves_syntactic_flags(self):
        for names in (("rCoP3", "bCoP3"), ("rP3", "rbP3"), ("3K1", "rK3", "bK3"),
                      ("rP3", "bP3"), ("3K1",)):
            f = named(*names)
            d = swap_colours(f)
            assert (is_trivial_set(f) is None) == (is_trivial_set(d) is None)
            assert is_universally_colourable(f) == is_universally_colourable(d)
            assert expresses_finite_class(f) == expresses_finite_class(d)

    def test_universal_witness_swaps(self):
        from patternfree.patterns import universal_witness_colour

        f = named("rP3", "rbP3")
        assert universal_witness_colour(f) == "b"
        assert universal_witness_colour(swap_colours(f)) == "r"


class TestTrivial:
    def test_both_one_edge_patterns(self):
        colour, residual = is_trivial_set(named("rCoP3", "bCoP3"))
        assert colour in "rb"
        assert len(residual) == 1 and residual[0].edge_count() == 1

    def test_monochromatic_paths_not_trivial(self):
        assert is_trivial_set(named("rP3", "bP3")) is None

    def test_edgeless_only(self):
        colour, residual = is_trivial_set(named("3K1"))
        assert residual[0].edge_count() == 0 and residual[0].n == 3


class TestUniversal:
    def test_no_blue_member(self):
        assert is_universally_colourable(named("rP3", "rbP3"))

    def test_both_colours_present(self):
        assert not is_universally_colourable(named("rP3", "bP3"))

    def test_edgeless_blocks(self):
        assert not is_universally_colourable(named("3K1"))

    def test_universal_sets_accept_everything(self, graphs_up_to_6):
        from patternfree.oracle import admits_colouring

        for f in (named("rP3", "rbP3"), named("rK3"), named("rCoP3", "rP3")):
            assert is_universally_colourable(f)
            for g in graphs_up_to_6:
                assert admits_colouring(g, f) is not None


class TestFinite:
    def test_positive(self):
        assert expresses_finite_class(named("3K1", "rK3", "bK3"))

    def test_no_edgeless(self):
        assert not expresses_finite_class(named("rK3", "bK3"))

    def test_no_blue_clique(self):
        assert not expresses_finite_class(named("3K1", "rK3", "rrbK3"))


class TestConstructors:
    def test_bbar3(self):
        assert set(build_Bbar(3).names()) == {"3K1", "rCoP3", "rP3", "rK3"}

    def test_bbar1_bbar2(self):
        assert len(build_Bbar(1)) == 1
        b2 = build_Bbar(2)
        assert len(b2) == 2
        assert {p.graph.edge_count() for p in b2} == {0, 1}

    def test_lk2(self):
        assert build_Lk(2) == parse_pattern_set("rP3 bP3 rrbK3 rbbK3")

    def test_lk3_has_seventeen(self):
        l3 = build_Lk(3)
        assert len(l3) == 17
        from patternfree.patterns import _has_tricoloured_vertex

        for p in l3:
            if p.graph.n == 4:
                assert _has_tricoloured_vertex(p)

    def test_lift_co_p3_blue(self):
        assert set(lift_graph(co_p3(), "b", 2).names()) == {
            "bCoP3", "rbP3", "rrbK3"
        }

    def test_lift_p3(self):
        assert set(lift_graph(path(3), "b", 2).names()) == {"bP3", "rbbK3"}
        assert set(lift_graph(path(3), "r", 2).names()) == {"rP3", "rrbK3"}

    def test_lift_semantics(self, graphs_up_to_5):
        # forbidding the lift of H makes the colour class H-free
        from patternfree.graphs import EdgeColouring, contains_induced
        from patternfree.oracle import admits_colouring

        lifted = lift_graph(path(3), "b", 2)
        for g in graphs_up_to_5[::2]:
            w = admits_colouring(g, lifted)
            if w is not None:
                blue_edges = [
                    e for e, c in w.colouring.as_map().items() if c == "b"
                ]
                blue = Graph(g.n, blue_edges)
                assert contains_induced(blue, path(3)) is None


class TestPatternSetBasics:
    def test_mixed_k_rejected(self):
        p2 = CATALOGUE["rP3"]
        p3 = Pattern(p2.graph, p2.colours, 3)
        with pytest.raises(PatternError):
            PatternSet([p2, p3], 2)

    def test_all_colourings_counts(self):
        assert len(all_colourings_of(path(3))) == 3
        assert len(all_colourings_of(complete(3))) == 4
        assert len(all_colourings_of(co_p3())) == 2

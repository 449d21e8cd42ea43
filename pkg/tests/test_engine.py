"""Dispatcher classification rows, engine decisions against the oracle, and
witness guarantees."""

import itertools

import pytest

from patternfree.engine import (
    EngineError,
    classify_pattern_set,
    decide,
    expanded_set,
)
from patternfree.oracle import admits_colouring, verify_colouring
from patternfree.patterns import named, parse_pattern_set, swap_colours
from patternfree.recognizers import ClassId
from patternfree.smallgraphs import (
    claw,
    complete,
    complete_multipartite,
    cycle,
    diamond,
    empty_graph,
    path,
)


class TestClassification:
    def test_engine_rows(self):
        rows = {
            ("rCoP3", "bCoP3"): "trivial",
            ("rP3", "rbP3"): "trivial",
            ("rK3",): "monochromatic",
            ("rCoP3", "bCoP3", "rP3", "bP3"): "multipartite-direct",
            ("3K1", "rK3", "bK3"): "bruteforce",
            ("rP3", "bP3"): "structural",
            ("rP3", "bP3", "rK3", "bK3"): "structural",
            ("rCoP3", "bP3", "bK3"): "consistency",
            ("bP3", "rK3", "rrbK3"): "2sat",
            ("rP3", "bP3", "bK3"): "gf2",
            ("rP3", "bP3", "rK3", "rbbK3"): "gf2",
            ("rK3", "rbP3", "bP3"): "horn",
            ("rK3", "bK3"): "bruteforce",
            ("rP3", "bP3", "rrbK3"): "bruteforce",
        }
        for names, engine in rows.items():
            cls = classify_pattern_set(named(*names))
            assert cls.engine_choice == engine, (names, cls.engine_choice)

    def test_monochromatic_needs_missing_colour(self):
        cls = classify_pattern_set(named("rK3",))
        assert cls.universally_colourable

    def test_finite_flag(self):
        cls = classify_pattern_set(named("3K1", "rK3", "bK3"))
        assert cls.finite_class and cls.hardness_note

    def test_hardness_note_iff_no_schaefer(self):
        for names in (("rK3", "bK3"), ("rK3", "bK3", "rbbK3"),
                      ("rP3", "bP3", "rrbK3"), ("rP3", "bK3")):
            cls = classify_pattern_set(named(*names))
            assert cls.hardness_note is not None
            assert not cls.polymorphisms.any_schaefer()
        for names in (("rP3", "bP3"), ("rK3",), ("rCoP3", "bCoP3")):
            cls = classify_pattern_set(named(*names))
            assert cls.hardness_note is None
            assert cls.polymorphisms.any_schaefer()

    def test_np_sets_mention_np(self):
        for names in (("rK3", "bK3"), ("rK3", "bK3", "rbbK3")):
            cls = classify_pattern_set(named(*names))
            assert "NP-complete" in cls.hardness_note

    def test_structural_class_filled_independently(self):
        cls = classify_pattern_set(named("rCoP3", "bCoP3"))
        assert cls.engine_choice == "trivial"
        assert cls.structural_class is ClassId.COMPLETE_MULTIPARTITE

    def test_swap_invariance(self):
        for names in (("rCoP3", "bP3"), ("rP3", "bP3", "bK3"),
                      ("bP3", "rK3", "rrbK3"), ("3K1", "rP3")):
            a = classify_pattern_set(named(*names))
            b = classify_pattern_set(swap_colours(named(*names)))
            assert a.engine_choice == b.engine_choice
            assert a.universally_colourable == b.universally_colourable
            assert a.finite_class == b.finite_class
            assert (a.trivial is None) == (b.trivial is None)
            assert a.polymorphisms.majority == b.polymorphisms.majority
            assert a.polymorphisms.minority == b.polymorphisms.minority
            assert a.polymorphisms.min == b.polymorphisms.max
            assert a.polymorphisms.max == b.polymorphisms.min

    def test_k3_sets_go_exhaustive(self):
        cls = classify_pattern_set(parse_pattern_set("k=3 n=3;0-1:g;0-2:g"))
        assert cls.engine_choice == "bruteforce"
        assert "k-colour" in cls.hardness_note

    def test_expansion(self):
        assert expanded_set(named("rP3", "bP3", "bK3")) == named(
            "rP3", "bP3", "bK3", "rrbK3"
        )
        f = named("rP3", "bP3")
        assert expanded_set(f) is f

    def test_expansion_preserves_colourability(self, graphs_up_to_6):
        for base in (("rP3", "bP3", "bK3"), ("rP3", "bP3", "rK3")):
            f = named(*base)
            ef = expanded_set(f)
            assert ef != f
            for g in graphs_up_to_6:
                assert (admits_colouring(g, f) is None) == (
                    admits_colouring(g, ef) is None
                )


class TestDecide:
    def test_spec_examples(self):
        assert not decide(cycle(5), named("rP3", "bP3")).admits
        v = decide(diamond(), named("bP3", "rP3", "bK3", "rbbK3"))
        assert v.admits
        assert not decide(complete(6), named("rK3", "bK3")).admits
        v = decide(claw(), named("rP3", "rbP3"))
        assert v.admits and set(v.witness.colouring.colours) == {"b"}

    def test_witness_always_verified(self, graphs_up_to_5):
        from patternfree.suites import curated_pattern_sets

        for f in curated_pattern_sets()[::5]:
            for g in graphs_up_to_5[::3]:
                v = decide(g, f)
                if v.admits:
                    assert v.witness.checked
                    assert verify_colouring(g, v.witness.colouring, f)

    def test_determinism(self):
        f = named("rP3", "bP3", "rK3", "bK3")
        a = decide(cycle(6), f)
        b = decide(cycle(6), f)
        assert a.admits == b.admits
        assert a.witness.colouring == b.witness.colouring

    def test_forced_engine_contract_errors(self):
        from patternfree.csp import CspContractError

        with pytest.raises((EngineError, CspContractError)):
            decide(complete(3), named("rK3", "bK3"), engine="2sat")
        with pytest.raises(EngineError):
            decide(complete(3), named("rK3", "bK3"), engine="structural")
        with pytest.raises(EngineError):
            decide(complete(3), named("rK3", "bK3"), engine="trivial")

    def test_forced_oracle(self):
        v = decide(cycle(5), named("rP3", "bP3"), engine="oracle")
        assert not v.admits and v.engine_used == "oracle"

    def test_engine_vs_oracle_differential(self, graphs_up_to_5):
        from patternfree.suites import curated_pattern_sets

        for f in curated_pattern_sets():
            for g in graphs_up_to_5:
                want = admits_colouring(g, f) is not None
                assert decide(g, f).admits == want, (f.names(), g)


class TestMultipartite:
    def test_profiles_against_forced_oracle(self):
        sets = [
            named("rCoP3", "bCoP3", "rP3", "bP3"),
            named("rCoP3", "bCoP3", "rK3", "bK3"),
            named("rCoP3", "bCoP3", "rP3", "bK3"),
            named("rCoP3", "bCoP3", "rbP3", "rK3"),
            named("3K1", "rCoP3", "bCoP3", "rK3", "bK3"),
            named("rCoP3", "bCoP3", "rP3", "bP3", "rK3"),
        ]
        profiles = []
        for m in range(1, 5):
            for sizes in itertools.combinations_with_replacement(range(1, 6), m):
                if sum(sizes) <= 8:
                    profiles.append(sorted(sizes, reverse=True))
        for f in sets:
            for prof in profiles:
                g = complete_multipartite(prof)
                want = admits_colouring(g, f, force=True) is not None
                v = decide(g, f)
                assert v.admits == want, (f.names(), prof)

    def test_non_multipartite_rejected(self):
        v = decide(path(4), named("rCoP3", "bCoP3", "rK3", "bK3"))
        assert not v.admits

    def test_large_instances_beyond_oracle(self):
        # witness extension must handle graphs the oracle cannot touch
        cases = [
            ([2] * 9, named("rCoP3", "bCoP3", "rP3", "bP3"), True),
            ([10, 10, 10], named("rCoP3", "bCoP3", "rP3", "bK3"), False),
            ([3] + [1] * 12, named("rCoP3", "bCoP3", "rP3", "bK3"), True),
            ([1] * 20, named("rCoP3", "bCoP3", "rK3", "bK3"), False),
            ([7] * 4, named("rCoP3", "bCoP3", "rK3", "rrbK3"), True),
            ([5, 5, 5, 5, 5], named("rCoP3", "bCoP3", "rK3", "bK3"), True),
        ]
        for prof, f, want in cases:
            v = decide(complete_multipartite(prof), f)
            assert v.admits == want, (prof, f.names())

    def test_empty_graph(self):
        v = decide(empty_graph(0), named("rCoP3", "bCoP3", "rK3", "bK3"))
        assert v.admits

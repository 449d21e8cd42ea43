"""Command-line surface: subcommands, formats, exit codes, and determinism."""

import json

import pytest

from patternfree.cli import main
from patternfree.graphs import write_graph6
from patternfree.smallgraphs import claw, complete, cycle


@pytest.fixture
def run(capsys, monkeypatch, tmp_path):
    def _run(*args, stdin=None):
        if stdin is not None:
            import io

            monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
        code = main(list(args))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


def g6(g) -> str:
    return write_graph6(g).decode()


class TestDecide:
    def test_no_with_exit_one(self, run):
        code, out, _ = run("decide", "--patterns", "rP3 bP3", "--graph", "-",
                           stdin=g6(claw()) + "\n")
        assert code == 1 and out.strip() == "no"

    def test_universal_yes(self, run):
        code, out, _ = run("decide", "--patterns", "rP3 rbP3", "--graph", "-",
                           stdin=g6(claw()) + "\n")
        assert code == 0 and out.strip() == "yes bbb"

    def test_multi_graph_mode(self, run):
        stdin = g6(cycle(4)) + "\n" + g6(cycle(5)) + "\n"
        code, out, _ = run("decide", "--patterns", "rP3 bP3", "--graph", "-",
                           stdin=stdin)
        lines = out.strip().splitlines()
        assert lines[0].startswith("yes") and lines[1] == "no"
        assert code == 0  # exit 1 is reserved for single-graph mode

    def test_json_format_and_check(self, run):
        code, out, _ = run("decide", "--patterns", "rP3 bP3", "--graph", "-",
                           "--format", "json", "--check",
                           stdin=g6(cycle(4)) + "\n")
        records = json.loads(out)
        assert records[0]["admits"] and len(records[0]["witness"]) == 4

    def test_pattern_file(self, run, tmp_path):
        pfile = tmp_path / "patterns.txt"
        pfile.write_text("rK3 bK3\n")
        code, out, _ = run("decide", "--patterns", str(pfile), "--graph", "-",
                           stdin=g6(complete(6)) + "\n")
        assert out.strip() == "no"

    def test_forced_engine(self, run):
        code, out, _ = run("decide", "--patterns", "rP3 bP3", "--graph", "-",
                           "--engine", "oracle", stdin=g6(cycle(5)) + "\n")
        assert code == 1 and out.strip() == "no"

    def test_parse_error_exit_two(self, run):
        code, _, err = run("decide", "--patterns", "bogus", "--graph", "-",
                           stdin=g6(claw()))
        assert code == 2 and "error" in err

    def test_bad_graph6_exit_two(self, run):
        code, _, err = run("decide", "--patterns", "rP3", "--graph", "-",
                           stdin="\x01bad\n")
        assert code == 2 and "error" in err

    def test_determinism(self, run):
        args = ("decide", "--patterns", "rP3 bP3 rK3 bK3", "--graph", "-",
                "--format", "json")
        stdin = g6(cycle(6)) + "\n"
        _, out1, _ = run(*args, stdin=stdin)
        _, out2, _ = run(*args, stdin=stdin)
        assert out1 == out2


class TestClassify:
    def test_json_schema(self, run):
        code, out, _ = run("classify", "--patterns", "rK3 bK3",
                           "--format", "json")
        payload = json.loads(out)
        assert set(payload) == {
            "trivial", "universal", "finite", "polymorphisms", "engine",
            "structural_class", "hardness_note",
        }
        assert set(payload["polymorphisms"]) == {
            "min", "max", "majority", "minority", "constant_r", "constant_b"
        }
        assert "NP-complete" in payload["hardness_note"]

    def test_trivial_set(self, run):
        code, out, _ = run("classify", "--patterns", "rCoP3 bCoP3",
                           "--format", "json")
        payload = json.loads(out)
        assert payload["engine"] == "trivial"
        assert payload["structural_class"] == "COMPLETE_MULTIPARTITE"

    def test_structural_registration(self, run):
        code, out, _ = run("classify", "--patterns", "rP3 bP3 bK3",
                           "--format", "json")
        payload = json.loads(out)
        assert payload["engine"] in ("2sat", "gf2", "structural")


class TestPolymorphisms:
    def test_template_dump(self, run):
        code, out, _ = run("polymorphisms", "--patterns", "rP3 bP3",
                           "--format", "json")
        payload = json.loads(out)
        assert payload["polymorphisms"]["majority"]
        assert len(payload["template"]["relations"]) == 3
        for rel in payload["template"]["relations"]:
            assert rel["tuples"] == ["br", "rb"]


class TestTable:
    @pytest.mark.parametrize("which", ["preserveP3", "preserveK3", "two-edge"])
    def test_pass(self, run, which):
        code, out, _ = run("table", which)
        assert code == 0 and "DIFF" not in out

    def test_landscape(self, run):
        code, out, _ = run("table", "landscape")
        assert code == 0 and "NP-complete" in out


class TestGadget:
    def test_emit_and_verify(self, run, tmp_path):
        cnf = tmp_path / "f.cnf"
        cnf.write_text("p 1in3 5 2\n1 2 3\n1 4 5\n")
        code, out, _ = run("gadget", "--cnf", str(cnf), "--verify")
        lines = out.strip().splitlines()
        assert code == 0
        assert "verified: equivalent" in out
        side_map = json.loads(lines[1])
        assert len(side_map["occurrence_edges"]) == 6

    def test_oversized_still_emits(self, run, tmp_path):
        cnf = tmp_path / "f.cnf"
        clauses = "\n".join("1 2 3" for _ in range(5))
        cnf.write_text(f"p 1in3 3 5\n{clauses}\n")
        code, out, _ = run("gadget", "--cnf", str(cnf), "--verify")
        assert code == 1
        assert out.strip()  # the graph6 build is still emitted
        assert "verification skipped" in out

    def test_json_format(self, run, tmp_path):
        cnf = tmp_path / "f.cnf"
        cnf.write_text("p 1in3 3 1\n1 2 3\n")
        code, out, _ = run("gadget", "--cnf", str(cnf), "--format", "json")
        payload = json.loads(out)
        assert payload["order"] == 3 and payload["graph6"] == "Bw"


class TestSelftest:
    def test_bad_max_n(self, run):
        code, _, err = run("selftest", "--max-n", "2")
        assert code == 2 and "error" in err

    def test_small_run(self, run):
        code, out, _ = run("selftest", "--max-n", "3")
        assert code == 0
        assert "engine-vs-oracle: pass" in out
        assert "gadget-round-trip: pass" in out

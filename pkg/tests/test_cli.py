from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from indumatch.cli import doubling_violations, main
from indumatch.families import FamilySpec, gen_cycle, gen_path
from indumatch.graph import format_graph, parse_graph
from indumatch.oracle import is_maximal_induced, matching_from_pairs


@pytest.fixture
def write(tmp_path):
    def _write(name, graph):
        path = tmp_path / name
        path.write_text(format_graph(graph) if not isinstance(graph, str) else graph)
        return str(path)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def desk_specs():
    specs = [FamilySpec("path", (n,)) for n in (1, 2, 7, 12)]
    specs += [FamilySpec("cycle", (n,)) for n in (3, 11)]
    specs += [FamilySpec("S", (r, k)) for r in range(1, 6) for k in range(4)]
    specs += [FamilySpec(f, (r,)) for f in "GHL" for r in range(1, 6)]
    specs += [FamilySpec("Q", (k, r)) for k in range(4, 13, 2) for r in range(1, 6)]
    specs += [FamilySpec(f"Regular{v}", (r, t)) for v in "GHL" for r in (3, 4, 5) for t in range(1, 5)]
    specs += [FamilySpec("MinimalGirth", (g,)) for g in (10, 12, 14)]
    return specs


class TestCommands:
    def test_tree_p7(self, capsys, write):
        code, out, _ = run(capsys, "tree", "--in", write("p7.txt", gen_path(7)))
        doc = json.loads(out)
        assert code == 0 and doc["verdict"] == "well-indumatched" and doc["k"] == 2

    def test_kwim_p5(self, capsys, write):
        code, out, err = run(capsys, "kwim", "--k", "2", "--in", write("p5.txt", gen_path(5)))
        doc = json.loads(out)
        assert code == 0 and doc["verdict"] is False and doc["trace"]
        assert "not 2-well-indumatched" in err

    def test_kwim_k_max(self, capsys, write):
        code, out, _ = run(capsys, "kwim", "--k-max", "4", "--in", write("c11.txt", gen_cycle(11)))
        assert code == 0 and json.loads(out)["k"] == 3

    def test_generate_q(self, capsys):
        code, out, _ = run(capsys, "generate", "--family", "Q", "--k", "6", "--r", "2")
        assert code == 0
        assert parse_graph(out) == FamilySpec("Q", (6, 2)).build()

    def test_generate_json(self, capsys):
        code, out, _ = run(capsys, "generate", "--family", "G", "--r", "2", "--format", "json")
        doc = json.loads(out)
        assert code == 0 and doc["n"] == 11 and len(doc["edges"]) == 11

    def test_oracle_certificate_reverifies(self, capsys, write):
        g = gen_path(6)
        code, out, _ = run(capsys, "oracle", "--in", write("p6.txt", g))
        doc = json.loads(out)
        assert code == 0 and doc["verdict"] == "not-well-indumatched"
        for key in ("witness_small", "witness_large"):
            assert is_maximal_induced(g, matching_from_pairs(g, doc[key]))

    def test_tree_certificate_reverifies(self, capsys, write):
        g = gen_path(9)
        code, out, _ = run(capsys, "tree", "--in", write("p9.txt", g))
        doc = json.loads(out)
        small = matching_from_pairs(g, doc["witness_small"])
        large = matching_from_pairs(g, doc["witness_large"])
        assert is_maximal_induced(g, small) and is_maximal_induced(g, large)
        assert len(small) < len(large)

    def test_minimal_girth_wording(self, capsys, write):
        code, out, err = run(capsys, "minimal-girth", "--in", write("c11.txt", gen_cycle(11)))
        assert code == 0 and json.loads(out)["accepted"] is True
        assert "does not decide" in err

    def test_search(self, capsys):
        code, out, _ = run(capsys, "search-girth11", "--max-n", "12")
        doc = json.loads(out)
        assert code == 0 and doc["complete"]
        assert [f["n"] for f in doc["found"]] == [11]

    def test_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO("0 1\n1 2\n"))
        code, out, _ = run(capsys, "oracle", "--in", "-")
        assert code == 0 and json.loads(out)["k"] == 1


class TestExitCodes:
    def test_bad_input(self, capsys, write):
        assert run(capsys, "oracle", "--in", write("bad.txt", "0 0\n"))[0] == 2
        assert run(capsys, "oracle", "--in", write("junk.txt", "a b\n"))[0] == 2
        assert run(capsys, "oracle", "--in", "/no/such/file")[0] == 2

    def test_missing_input(self, capsys):
        assert run(capsys, "oracle")[0] == 2

    def test_not_a_tree(self, capsys, write):
        assert run(capsys, "tree", "--in", write("c5.txt", gen_cycle(5)))[0] == 2

    def test_unknown_family(self, capsys):
        assert run(capsys, "generate", "--family", "petersen")[0] == 2

    def test_budget(self, capsys, write):
        assert run(capsys, "oracle", "--budget", "10", "--in", write("c30.txt", gen_cycle(30)))[0] == 3

    def test_search_budget(self, capsys):
        code, out, _ = run(capsys, "search-girth11", "--max-n", "12", "--budget", "1")
        assert code == 3 and json.loads(out)["complete"] is False

    def test_kwim_needs_k(self, capsys, write):
        assert run(capsys, "kwim", "--in", write("p3.txt", gen_path(3)))[0] == 2

    def test_module_entry_point(self, tmp_path):
        path = tmp_path / "p4.txt"
        path.write_text(format_graph(gen_path(4)))
        proc = subprocess.run([sys.executable, "-m", "indumatch", "tree", "--in", str(path)],
                              capture_output=True, text=True, check=False)
        assert proc.returncode == 0 and json.loads(proc.stdout)["k"] == 1


class TestRoundTrip:
    def test_generate_parse_emit(self, capsys):
        for spec in desk_specs():
            argv = ["generate", "--family", spec.family]
            names = {"path": "n", "cycle": "n", "S": "rk", "G": "r", "H": "r", "L": "r",
                     "Q": "kr", "MinimalGirth": "g"}.get(spec.family, "rt")
            for name, value in zip(names, spec.params):
                argv += [f"--{name}", str(value)]
            code, out, _ = run(capsys, *argv)
            assert code == 0
            assert format_graph(parse_graph(out)) == out
            assert parse_graph(out) == spec.build()


class TestBench:
    def test_empty_sizes(self, capsys):
        code, out, _ = run(capsys, "bench", "--sizes", "")
        assert code == 0 and out == "n,ms\n"

    def test_small_sizes(self, capsys):
        code, out, _ = run(capsys, "bench", "--sizes", "64,128,256")
        lines = out.splitlines()
        assert code == 0 and lines[0] == "n,ms" and len(lines) == 4
        assert [int(line.split(",")[0]) for line in lines[1:]] == [64, 128, 256]

    def test_doubling_violations(self):
        rows = [(2**14, 10.0), (2**15, 20.0), (2**16, 70.0)]
        assert doubling_violations(rows) == [(2**15, 3.5)]
        assert doubling_violations([(100, 1.0), (200, 9.0)]) == []

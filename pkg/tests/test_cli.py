from __future__ import annotations

import json
import subprocess
import sys

import pytest

from locrainbow.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_INPUT, EXIT_OK, main, parse_range
from locrainbow.graph import from_edge_list


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main([str(a) for a in argv])
        out, err = capsys.readouterr()
        return code, out, err

    return _run


@pytest.fixture
def graph_file(run, tmp_path):
    def _make(family, n):
        code, out, _ = run("gen", family, n)
        assert code == EXIT_OK
        path = tmp_path / f"{family}{n}.txt"
        path.write_text(out)
        return path

    return _make


class TestGen:
    def test_cycle5(self, run):
        code, out, _ = run("gen", "cycle", 5)
        g = from_edge_list(out)
        assert code == EXIT_OK and g.n == 5 and g.m == 5

    def test_n2_odd(self, run):
        code, _, err = run("gen", "n2", 3)
        assert code == EXIT_INPUT
        assert "even" in err

    def test_n3_12(self, run):
        g = from_edge_list(run("gen", "n3", 12)[1])
        assert (g.n, g.m) == (12, 54)

    def test_file_round_trip(self, run, graph_file):
        path = graph_file("complete", 4)
        assert run("gen", "file", path)[1] == path.read_text()

    def test_bad_family(self, run):
        assert run("gen", "wheel", 5)[0] == EXIT_INPUT

    def test_non_integer(self, run):
        assert run("gen", "cycle", "five")[0] == EXIT_INPUT


class TestCheck:
    def test_r16(self, run, graph_file, tmp_path):
        cert = tmp_path / "c.json"
        cert.write_text(run("construct", "n2", 16)[1])
        code, out, _ = run("check", graph_file("n2", 16), cert)
        assert code == EXIT_OK
        assert out.strip() == "OK k=9"

    def test_c10_all_ones(self, run, graph_file, tmp_path):
        cert = tmp_path / "c.json"
        cert.write_text(json.dumps({"n": 10, "k": 1, "colors": [1] * 10}))
        code, out, _ = run("check", graph_file("cycle", 10), cert)
        assert code == EXIT_FAIL
        assert out.strip() == "FAIL not-rainbow-connected witness (1,6)"

    def test_malformed_json(self, run, graph_file, tmp_path):
        cert = tmp_path / "c.json"
        cert.write_text("{oops")
        assert run("check", graph_file("cycle", 5), cert)[0] == EXIT_INPUT

    def test_code_table(self, run, graph_file, tmp_path):
        cert = tmp_path / "c.json"
        cert.write_text(json.dumps({"n": 5, "k": 3, "colors": [1, 1, 1, 2, 3]}))
        code, out, _ = run("check", graph_file("cycle", 5), cert, "--codes")
        assert code == EXIT_OK
        assert "(0, 2, 2)" in out.splitlines()[2]

    def test_missing_file(self, run, tmp_path):
        assert run("check", tmp_path / "none.txt", tmp_path / "none.json")[0] == EXIT_INPUT


class TestSolve:
    def test_c8(self, run, graph_file):
        code, out, _ = run("solve", graph_file("cycle", 8))
        assert code == EXIT_OK
        assert out.splitlines()[0] == "rvcl = 4"

    def test_rvc_c9(self, run, graph_file):
        code, out, _ = run("solve", "--rvc", graph_file("cycle", 9))
        assert code == EXIT_OK and out.splitlines()[0] == "rvc = 3"

    def test_budget(self, run, graph_file):
        code, _, err = run("solve", "--budget", 10, graph_file("cycle", 11))
        assert code == EXIT_BUDGET
        assert "budget" in err

    def test_k_max(self, run, graph_file):
        assert run("solve", "--k-max", 4, graph_file("cycle", 10))[0] == EXIT_BUDGET

    def test_json_round_trips_through_check(self, run, graph_file, tmp_path):
        graph = graph_file("n3", 9)
        code, out, _ = run("solve", "--json", "--family", "n3", graph)
        doc = json.loads(out)
        assert code == EXIT_OK and doc["k"] == 5 and doc["report"]["value"] == 5
        cert = tmp_path / "c.json"
        cert.write_text(out)
        assert run("check", graph, cert)[0] == EXIT_OK

    def test_parallel(self, run, graph_file):
        code, out, _ = run("solve", "--parallel", "--workers", 2, graph_file("cycle", 10))
        assert code == EXIT_OK and out.startswith("rvcl = 5")

    def test_bad_budget(self, run, graph_file):
        assert run("solve", "--budget", 0, graph_file("cycle", 5))[0] == EXIT_INPUT

    def test_disconnected(self, run, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text("4 2\n1 2\n3 4\n")
        assert run("solve", path)[0] == EXIT_INPUT


class TestConstruct:
    def test_n2_16(self, run):
        assert json.loads(run("construct", "n2", 16)[1])["k"] == 9

    def test_n3_13(self, run):
        assert json.loads(run("construct", "n3", 13)[1])["k"] == 6

    def test_cycle9(self, run):
        assert json.loads(run("construct", "cycle", 9)[1])["k"] == 4

    def test_bad_order(self, run):
        assert run("construct", "n3", 4)[0] == EXIT_INPUT

    @pytest.mark.parametrize(
        "family, ns, gen",
        [("cycle", range(3, 31), "cycle"), ("n2", range(4, 31, 2), "n2"), ("n3", range(5, 31), "n3")],
    )
    def test_every_output_checks(self, run, graph_file, tmp_path, family, ns, gen):
        for n in ns:
            code, out, _ = run("construct", family, n)
            assert code == EXIT_OK
            cert = tmp_path / "c.json"
            cert.write_text(out)
            assert run("check", graph_file(gen, n), cert)[:2] == (EXIT_OK, f"OK k={json.loads(out)['k']}\n")


class TestReproduce:
    def test_cycles_exact(self, run):
        code, _, err = run("reproduce", "--cycles", "3..11", "--exact")
        assert code == EXIT_OK
        assert "9/9 rows agree" in err

    def test_n3_exact_values(self, run):
        code, out, _ = run("reproduce", "--n3", "5..9", "--exact", "--csv", "-")
        assert code == EXIT_OK
        rows = out.strip().splitlines()[1:]
        assert [r.split(",")[4] for r in rows] == ["3", "3", "4", "4", "5"]

    def test_n2_construct_only(self, run):
        code, out, _ = run("reproduce", "--n2", "4..40", "--construct-only", "--csv", "-")
        rows = [r.split(",") for r in out.strip().splitlines()[1:]]
        assert code == EXIT_OK
        assert len(rows) == 19
        assert all(r[3] == str(int(r[1]) // 2 + 1) and r[5] == "yes" for r in rows)

    def test_csv_deterministic(self, run, tmp_path):
        argv = ("reproduce", "--n3", "5..12", "--cycles", "3..9", "--complete", "3..5", "--exact", "--csv")
        first = tmp_path / "a.csv"
        second = tmp_path / "b.csv"
        assert run(*argv, first)[0] == EXIT_OK
        assert run(*argv, second)[0] == EXIT_OK
        assert first.read_text() == second.read_text()
        lines = first.read_text().splitlines()
        assert lines[0] == "family,n,formula,construction_k,solver,agree"
        keys = [(line.split(",")[0], int(line.split(",")[1])) for line in lines[1:]]
        assert keys == sorted(keys)

    def test_rvc_cycles(self, run):
        code, out, _ = run("reproduce", "--rvc-cycles", "4..10", "--exact", "--csv", "-")
        assert code == EXIT_OK
        assert [r.split(",")[4] for r in out.strip().splitlines()[1:]] == ["1", "1", "2", "3", "3", "3", "4"]

    def test_budget_is_not_disagreement(self, run):
        code, out, _ = run("reproduce", "--cycles", "11", "--exact", "--budget", 5, "--csv", "-")
        assert code == EXIT_OK
        assert out.strip().splitlines()[1].split(",")[4] == "budget"

    def test_out_of_domain(self, run):
        assert run("reproduce", "--n3", "3..6")[0] == EXIT_INPUT

    def test_bad_range(self, run):
        assert run("reproduce", "--cycles", "a..b")[0] == EXIT_INPUT

    def test_parse_range(self):
        assert parse_range("3..11") == range(3, 12)
        assert parse_range("7") == range(7, 8)


def test_no_command(run):
    assert run()[0] == EXIT_INPUT


def test_module_entry_point(tmp_path):
    graph = tmp_path / "c.txt"
    graph.write_text("3 3\n1 2\n2 3\n1 3\n")
    done = subprocess.run([sys.executable, "-m", "locrainbow", "solve", str(graph)], capture_output=True, text=True, check=False)
    assert done.returncode == 0
    assert done.stdout.startswith("rvcl = 3")

import json
import shutil
import subprocess
import sys

import pytest

from bddv.cli import DimacsParseError, format_dimacs, main, parse_dimacs
from bddv.search import validate_solution

from conftest import cycle_graph, path_graph

C4_DIMACS = "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n"


class TestParseDimacs:
    def test_basic(self):
        g = parse_dimacs(C4_DIMACS)
        assert g.n == 4
        assert g.edge_list() == [(0, 1), (0, 3), (1, 2), (2, 3)]

    def test_comments_and_blank_lines(self):
        text = "c made by hand\n\np edge 2 1\nc midway\ne 1 2\n\n"
        assert parse_dimacs(text).m == 1

    def test_isolated_vertices_allowed(self):
        g = parse_dimacs("p edge 5 0\n")
        assert g.n == 5 and g.m == 0

    def test_duplicate_edges_collapse(self):
        g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 1\n")
        assert g.m == 1

    def test_declared_edge_count_not_enforced(self):
        assert parse_dimacs("p edge 3 99\ne 1 2\n").m == 1

    @pytest.mark.parametrize("text,lineno,needle", [
        ("p edge 3 1\ne 2 2\n", 2, "self-loop"),
        ("p edge 3 1\ne 1 4\n", 2, "out of range"),
        ("p edge 3 0\np edge 3 0\n", 2, "duplicate p"),
        ("e 1 2\n", 1, "before the p line"),
        ("p vertex 3 0\n", 1, "expected 'p edge"),
        ("p edge 3\n", 1, "expected 'p edge"),
        ("p edge x 0\n", 1, "must be integers"),
        ("p edge 3 0\ne 1\n", 2, "expected 'e"),
        ("p edge 3 0\ne one 2\n", 2, "must be integers"),
        ("p edge -1 0\n", 1, "nonnegative"),
        ("q 1 2\n", 1, "unrecognized"),
    ])
    def test_errors_carry_line_numbers(self, text, lineno, needle):
        with pytest.raises(DimacsParseError) as info:
            parse_dimacs(text)
        assert info.value.line == lineno
        assert f"line {lineno}:" in str(info.value)
        assert needle in str(info.value)

    def test_missing_p_line(self):
        with pytest.raises(DimacsParseError, match="missing 'p edge"):
            parse_dimacs("c nothing else\n")


class TestFormatDimacs:
    def test_exact_output(self):
        assert format_dimacs(path_graph(3)) == "p edge 3 2\ne 1 2\ne 2 3\n"

    def test_round_trip(self):
        g = cycle_graph(6)
        again = parse_dimacs(format_dimacs(g))
        assert again.n == g.n and again.edge_list() == g.edge_list()

    def test_round_trip_after_deletion(self):
        g = cycle_graph(6)
        g.delete_vertices([0])
        text = format_dimacs(g)
        assert "e 1 " not in text
        assert parse_dimacs(text).m == g.m


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.col"
    path.write_text(C4_DIMACS)
    return str(path)


def decode_ids(line):
    return {int(tok) - 1 for tok in line.split()}


class TestDecideMode:
    def test_yes_with_certificate(self, c4_file, capsys):
        code = main(["--mode", "decide", "--input", c4_file, "--d", "1", "--k", "2"])
        out = capsys.readouterr().out.splitlines()
        assert code == 0
        assert out[0] == "YES"
        assert validate_solution(cycle_graph(4), 1, decode_ids(out[1]))

    def test_no(self, c4_file, capsys):
        code = main(["--mode", "decide", "--input", c4_file, "--d", "1", "--k", "1"])
        assert code == 1
        assert capsys.readouterr().out.splitlines() == ["NO"]

    def test_zero_budget_yes_when_satisfied(self, c4_file, capsys):
        code = main(["--mode", "decide", "--input", c4_file, "--d", "2", "--k", "0"])
        out = capsys.readouterr().out.splitlines()
        assert code == 0
        assert out == ["YES", ""]

    def test_missing_k_is_usage_error(self, c4_file, capsys):
        code = main(["--mode", "decide", "--input", c4_file, "--d", "1"])
        assert code == 2
        assert "error:" in capsys.readouterr().err

    def test_missing_input_and_gen(self, capsys):
        code = main(["--mode", "decide", "--d", "1", "--k", "1"])
        assert code == 2
        assert "exactly one of" in capsys.readouterr().err

    def test_both_input_and_gen(self, c4_file, capsys):
        code = main(["--mode", "decide", "--input", c4_file,
                     "--gen", "5,0.5,1", "--d", "1", "--k", "1"])
        assert code == 2

    def test_unreadable_input(self, tmp_path, capsys):
        code = main(["--mode", "decide", "--input", str(tmp_path / "nope.col"),
                     "--d", "1", "--k", "1"])
        assert code == 2
        assert "error:" in capsys.readouterr().err

    def test_parse_error_reported(self, tmp_path, capsys):
        bad = tmp_path / "bad.col"
        bad.write_text("p edge 3 1\ne 1 9\n")
        code = main(["--mode", "decide", "--input", str(bad), "--d", "1", "--k", "1"])
        assert code == 2
        assert "line 2" in capsys.readouterr().err

    def test_unknown_mode_rejected_by_argparse(self, capsys):
        with pytest.raises(SystemExit):
            main(["--mode", "solve"])


class TestMinimizeMode:
    def test_path_graph(self, tmp_path, capsys):
        path = tmp_path / "p5.col"
        path.write_text(format_dimacs(path_graph(5)))
        code = main(["--mode", "minimize", "--input", str(path), "--d", "1"])
        out = capsys.readouterr().out.splitlines()
        assert code == 0
        assert out == ["MINIMUM 1", "3"]

    def test_cap_below_minimum(self, c4_file, capsys):
        code = main(["--mode", "minimize", "--input", c4_file,
                     "--d", "1", "--k", "1"])
        assert code == 1
        assert capsys.readouterr().out.splitlines() == ["NO"]

    def test_cap_above_minimum(self, c4_file, capsys):
        code = main(["--mode", "minimize", "--input", c4_file,
                     "--d", "1", "--k", "3"])
        out = capsys.readouterr().out.splitlines()
        assert code == 0
        assert out[0] == "MINIMUM 2"

    def test_planted_star(self, capsys):
        code = main(["--mode", "minimize", "--gen", "5,0.0,0",
                     "--plant", "high_degree", "--d", "2"])
        out = capsys.readouterr().out.splitlines()
        assert code == 0
        assert out == ["MINIMUM 1", "1"]

    def test_plant_needs_gen(self, capsys):
        code = main(["--mode", "minimize", "--plant", "high_degree", "--d", "2"])
        assert code == 2
        assert "--plant needs --gen" in capsys.readouterr().err

    def test_plant_needs_d(self, capsys):
        code = main(["--mode", "minimize", "--gen", "8,0.0,0",
                     "--plant", "high_degree"])
        assert code == 2
        assert "--plant needs --d" in capsys.readouterr().err

    def test_unknown_plant_rejected(self, capsys):
        with pytest.raises(SystemExit):
            main(["--mode", "minimize", "--gen", "8,0.0,0",
                  "--plant", "mystery", "--d", "2"])

    def test_gen_is_deterministic(self, capsys):
        argv = ["--mode", "minimize", "--gen", "12,0.4,7", "--d", "2"]
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        assert capsys.readouterr().out == first


class TestStatsFile:
    def test_contents(self, c4_file, tmp_path):
        stats_path = tmp_path / "stats.json"
        code = main(["--mode", "decide", "--input", c4_file, "--d", "1",
                     "--k", "2", "--stats", str(stats_path)])
        assert code == 0
        doc = json.loads(stats_path.read_text())
        assert set(doc) == {"nodes", "max_depth", "fallback_count", "per_step",
                            "decrement_vectors", "max_measured_factor"}
        assert doc["fallback_count"] == 0
        assert doc["nodes"] >= 1
        assert doc["per_step"]["close_triple"] == 1

    def test_written_even_on_no(self, c4_file, tmp_path):
        stats_path = tmp_path / "stats.json"
        code = main(["--mode", "decide", "--input", c4_file, "--d", "1",
                     "--k", "0", "--stats", str(stats_path)])
        assert code == 1
        assert json.loads(stats_path.read_text())["nodes"] == 1


class TestVerifyFactorsMode:
    def test_all_rows_ok(self, capsys):
        code = main(["--mode", "verify-factors"])
        doc = json.loads(capsys.readouterr().out)
        assert code == 0
        assert doc["all_ok"] is True
        assert len(doc["rows"]) == 133
        assert doc["max_factor"] == pytest.approx(9.0, abs=1e-6)

    def test_absurd_tolerance_fails(self, capsys):
        code = main(["--mode", "verify-factors", "--tol", "1e-300"])
        doc = json.loads(capsys.readouterr().out)
        assert code == 1
        assert doc["all_ok"] is False


class TestOracleCheckMode:
    def test_default_seed(self, capsys, monkeypatch):
        monkeypatch.delenv("BDDV_SEED", raising=False)
        code = main(["--mode", "oracle-check"])
        out = capsys.readouterr().out
        assert code == 0
        assert "40/40 instances agree (seed 0)" in out

    def test_seed_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("BDDV_SEED", "7")
        code = main(["--mode", "oracle-check"])
        assert code == 0
        assert "(seed 7)" in capsys.readouterr().out

    def test_bad_seed_env(self, capsys, monkeypatch):
        monkeypatch.setenv("BDDV_SEED", "lucky")
        code = main(["--mode", "oracle-check"])
        assert code == 2
        assert "BDDV_SEED" in capsys.readouterr().err


def test_seed_env_overrides_gen_seed(capsys, monkeypatch):
    monkeypatch.setenv("BDDV_SEED", "3")
    assert main(["--mode", "minimize", "--gen", "12,0.5,99", "--d", "2"]) == 0
    with_env = capsys.readouterr().out
    monkeypatch.delenv("BDDV_SEED")
    assert main(["--mode", "minimize", "--gen", "12,0.5,3", "--d", "2"]) == 0
    assert capsys.readouterr().out == with_env


def test_console_script_runs():
    exe = shutil.which("bddv")
    assert exe is not None, "console script not installed"
    proc = subprocess.run([exe, "--mode", "decide", "--gen", "6,0.0,0",
                           "--d", "0", "--k", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("YES")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bddv.cli", "--mode",
                           "minimize", "--gen", "6,0.0,0", "--d", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "MINIMUM 0"

from __future__ import annotations

import io

import pytest

from cliquereg.cli import EXIT_HYPOTHESIS, EXIT_OK, EXIT_USAGE, main
from cliquereg.families import complete_bipartite, complete_graph
from cliquereg.fileio import emit_graph, parse_graph
from cliquereg.isomorphism import is_isomorphic
from cliquereg.srg_search import enumerate_feasible_naive


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def graph_file(tmp_path, capsys):
    def make(*gen_args: str):
        code, out, _ = run(capsys, "gen", *gen_args)
        assert code == EXIT_OK
        path = tmp_path / ("_".join(gen_args) + ".txt")
        path.write_text(out)
        return str(path)
    return make


@pytest.mark.parametrize("args, n, m", [(("rook", "3"), 9, 18), (("triangular", "5"), 10, 30),
                                         (("complete", "1"), 1, 0), (("gq22",), 15, 45),
                                         (("oa-block", "4", "3"), 16, 72), (("complete-bipartite", "2", "3"), 5, 6)])
def test_gen_sizes(capsys, args, n, m):
    code, out, _ = run(capsys, "gen", *args)
    assert code == EXIT_OK
    assert out.splitlines()[0] == f"{n} {m}"
    g = parse_graph(out)
    assert (g.n, g.m) == (n, m)


def test_gen_complete_one(capsys):
    assert run(capsys, "gen", "complete", "1")[1] == "1 0\n"


@pytest.mark.parametrize("argv", [("gen", "nosuch"), ("gen", "rook"), ("gen", "rook", "3", "4"),
                                  ("gen", "rook", "x"), ("frobnicate",), ()])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE and err


def test_parse_error_exit(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n0 1\n2 1\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == EXIT_USAGE and "line 3" in err


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "analyze", str(tmp_path / "missing.txt"))[0] == EXIT_USAGE


def test_analyze_rook9(capsys, graph_file):
    code, out, _ = run(capsys, "analyze", graph_file("rook", "3"))
    assert code == EXIT_OK
    assert "srg: 9 4 1 2" in out
    assert "clique-regular: omega=2, omega=3" in out
    assert "rca: yes" in out


def test_analyze_path(capsys, graph_file):
    out = run(capsys, "analyze", graph_file("path", "3"))[1]
    assert "srg: none" in out and "clique-regular: omega=2" in out


def test_analyze_gq22(capsys, graph_file):
    out = run(capsys, "analyze", graph_file("gq22"))[1]
    assert "srg: 15 6 1 3" in out and "rca: yes" in out


def test_analyze_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(emit_graph(complete_graph(4))))
    out = run(capsys, "analyze", "-")[1]
    assert "vertices: 4" in out and "clique-regular: omega=2, omega=4" in out


def test_transform_examples(capsys, graph_file):
    out = run(capsys, "transform", graph_file("rook", "3"), "clique", "3")[1]
    assert is_isomorphic(parse_graph(out), complete_bipartite(3, 3)) is not None
    out = run(capsys, "transform", graph_file("complete", "3"), "subdivision", "3")[1]
    assert is_isomorphic(parse_graph(out), complete_bipartite(1, 3)) is not None


@pytest.mark.parametrize("args", [("petersen",), ("rook", "4"), ("cycle", "7"), ("complete-bipartite", "2", "4")])
def test_line_equals_clique_two(capsys, graph_file, args):
    path = graph_file(*args)
    assert run(capsys, "transform", path, "line")[1] == run(capsys, "transform", path, "clique", "2")[1]


def test_transform_needs_omega(capsys, graph_file):
    assert run(capsys, "transform", graph_file("rook", "3"), "clique")[0] == EXIT_USAGE


def test_verify_not_clique_regular(capsys, graph_file):
    code, out, err = run(capsys, "verify", graph_file("complete", "4"), "--omega", "3")
    assert code == EXIT_HYPOTHESIS
    assert "not 3-clique regular" in err


def test_transform_not_clique_regular(capsys, graph_file):
    assert run(capsys, "transform", graph_file("complete", "4"), "clique", "3")[0] == EXIT_HYPOTHESIS


@pytest.mark.parametrize("args, omega", [(("gq22",), "3"), (("rook", "3"), "3"), (("triangular", "5"), "4"),
                                          (("complete", "3"), "3"), (("oa-block", "5", "2"), "5")])
def test_verify_passes(capsys, graph_file, args, omega):
    code, out, _ = run(capsys, "verify", graph_file(*args), "--omega", omega)
    assert code == EXIT_OK, out
    assert "FAIL" not in out
    assert "order-theorem: pass" in out


def test_verify_reports_kernel_experiment(capsys, graph_file):
    out = run(capsys, "verify", graph_file("gq22"), "--omega", "3")[1]
    assert "kernel-bounds: pass" in out and "m-n+c=1" in out


def test_scan_22(capsys):
    code, out, _ = run(capsys, "scan", "22")
    lines = out.splitlines()
    assert code == EXIT_OK and lines[0] == "n k lambda mu r f s g"
    found = {tuple(map(int, line.split()[:4])) for line in lines[1:]}
    for p in [(9, 4, 1, 2), (15, 6, 1, 3), (27, 10, 1, 5), (99, 14, 1, 2), (81, 20, 1, 6), (243, 22, 1, 2)]:
        assert p in found


def test_scan_matches_naive(capsys):
    out = run(capsys, "scan", "--max-k", "300")[1]
    records = [tuple(map(int, line.split())) for line in out.splitlines()[1:]]
    assert records == enumerate_feasible_naive(300)


def test_scan_with_solver(capsys):
    out = run(capsys, "scan", "60", "--with-solver")[1]
    lines = out.splitlines()[1:]
    assert lines and all(line.endswith(" solvable") for line in lines)


def test_scan_needs_k(capsys):
    assert run(capsys, "scan")[0] == EXIT_USAGE


def test_deterministic(capsys, graph_file):
    path = graph_file("triangular", "6")
    for argv in (("analyze", path), ("verify", path, "--omega", "5"), ("gen", "gq24"), ("scan", "40")):
        assert run(capsys, *argv) == run(capsys, *argv)

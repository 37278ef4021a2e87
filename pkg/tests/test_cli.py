import json
import os

import pytest
from typer.testing import CliRunner

from cwkit import (
    delete_vertex,
    eager_expression,
    load_graph,
    make_J,
    make_S,
    path_power,
    save_expression,
    save_graph,
)
from cwkit.__main__ import EXIT_UNKNOWN, app

runner = CliRunner()


@pytest.fixture
def p4_file(tmp_path):
    path = str(tmp_path / "p4.graph")
    save_graph(path_power(1, 4)[0], path)
    return path


def test_version():
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert "cwkit" in result.stdout


def test_gen_writes_a_graph(tmp_path):
    path = str(tmp_path / "j2.graph")
    result = runner.invoke(app, ["gen", "--family", "J", "--k", "2", "-o", path])
    assert result.exit_code == 0, result.stdout
    assert load_graph(path).n == 10


def test_gen_unknown_family(tmp_path):
    output = str(tmp_path / "q.graph")
    result = runner.invoke(app, ["gen", "--family", "Q", "-o", output])
    assert result.exit_code == 1
    assert "error" in result.stdout


def test_bubbles_marks_the_hole():
    result = runner.invoke(app, ["bubbles", "--family", "J", "--k", "3"])
    assert result.exit_code == 0, result.stdout
    assert "[z_8]" in result.stdout


def test_bubbles_needs_a_path_power():
    result = runner.invoke(app, ["bubbles", "--family", "S", "--k", "2"])
    assert result.exit_code == 1


@pytest.mark.parametrize("limit, code", [("3", 0), ("2", 1)])
def test_expr_eval(tmp_path, p4_file, limit, code):
    graph = load_graph(p4_file)
    expr_path = str(tmp_path / "p4.expr")
    save_expression(eager_expression(graph, list(graph.vertices())), expr_path)
    args = ["expr", "eval", expr_path, "--against", p4_file, "--width-limit", limit]
    result = runner.invoke(app, args + ["--require-linear"])
    assert result.exit_code == code, result.stdout


def test_expr_eval_syntax_error(tmp_path):
    path = tmp_path / "broken.expr"
    path.write_text("(v(1,a) + v(2,b)\n")
    result = runner.invoke(app, ["expr", "eval", str(path)])
    assert result.exit_code == 1
    assert "rejected" in result.stdout


def test_embed_with_an_explicit_map():
    result = runner.invoke(app, ["embed", "--map", "phi-z", "--k", "3", "--t", "1"])
    assert result.exit_code == 0, result.stdout
    assert "True" in result.stdout


def test_embed_unavailable_map():
    args = ["embed", "--map", "phi-s", "--k", "3", "--t", "5", "--case", "a"]
    result = runner.invoke(app, args)
    assert result.exit_code == 1
    assert "unavailable" in result.stdout


def test_embed_by_search(tmp_path):
    guest, host = str(tmp_path / "guest.graph"), str(tmp_path / "host.graph")
    s2 = make_S(2)
    save_graph(delete_vertex(s2, s2.id_of("w_4"))[0], guest)
    j2, g = make_J(2)
    save_graph(delete_vertex(j2, g)[0], host)
    output = str(tmp_path / "found.emb.json")
    result = runner.invoke(
        app, ["embed", "--guest", guest, "--host", host, "-o", output]
    )
    assert result.exit_code == 0, result.stdout
    with open(output) as f:
        assert len(json.load(f)["map"]) == 8


@pytest.mark.parametrize("w, code", [("3", 0), ("2", 1)])
def test_synth(tmp_path, p4_file, w, code):
    emit = str(tmp_path / "cert.expr")
    result = runner.invoke(
        app, ["synth", "--graph", p4_file, "--width", w, "--emit", emit]
    )
    assert result.exit_code == code, result.stdout
    assert os.path.isfile(emit) == (code == 0)


def test_solve_exact(p4_file):
    result = runner.invoke(app, ["solve", "lcwd", p4_file])
    assert result.exit_code == 0, result.stdout
    assert "lcwd = 3" in result.stdout


def test_solve_decide(p4_file):
    result = runner.invoke(app, ["solve", "cwd", p4_file, "--decide", "2"])
    assert result.exit_code == 0, result.stdout
    assert "no" in result.stdout


def test_solve_out_of_budget(tmp_path):
    path = str(tmp_path / "big.graph")
    save_graph(path_power(4, 40)[0], path)
    result = runner.invoke(
        app, ["solve", "lcwd", path, "--decide", "4", "--budget", "0"]
    )
    assert result.exit_code in (0, EXIT_UNKNOWN), result.stdout


def test_verify_one_claim(tmp_path):
    args = ["verify", "prop5.disjoint", "--k", "2", "--out", str(tmp_path)]
    result = runner.invoke(app, args)
    assert result.exit_code == 0, result.stdout
    assert "verified" in result.stdout


@pytest.mark.parametrize("args", [["verify", "lemma9"], ["verify"]])
def test_verify_errors(args):
    result = runner.invoke(app, args)
    assert result.exit_code == 1

import json
from pathlib import Path

import pytest

from signedtutte.cli import main
from signedtutte.graph import handcuff
from signedtutte.io import (
    ParseError,
    load_graph,
    parse_graph,
    parse_graph_document,
    parse_graph_json,
    render_graph,
    render_graph_json,
)

from conftest import cached_battery

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def sample(name):
    return str(SAMPLES / name)


# -- file formats -------------------------------------------------------------------

@pytest.mark.parametrize(
    "text, line",
    [
        ("e 0 1 +\n", 1),
        ("v 2\nv 3\n", 2),
        ("v 2\n\ne 0 2 +\n", 3),
        ("v 2\ne 0 1 *\n", 2),
        ("v 2\ne 0 x +\n", 2),
        ("# c\nfoo\n", 2),
        ("v two\n", 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    assert exc.value.line == line
    assert str(exc.value).startswith(f"line {line}:")


def test_missing_vertex_line():
    with pytest.raises(ParseError):
        parse_graph("# nothing\n")


def test_text_round_trip_over_battery():
    for g in cached_battery(3, 3):
        assert parse_graph(render_graph(g)) == g
        assert parse_graph_json(render_graph_json(g)).graph == g


def test_name_and_comments():
    doc = parse_graph_document("name my graph\nv 1  # one vertex\ne 0 0 -\n")
    assert doc.name == "my graph" and doc.graph.edges == ((0, 0, -1),)


def test_json_accepts_numeric_signs():
    doc = parse_graph_json('{"vertices": 2, "edges": [{"u": 0, "v": 1, "sign": -1}]}')
    assert doc.graph.edges == ((0, 1, -1),)
    with pytest.raises(ParseError):
        parse_graph_json('{"vertices": 2, "edges": [{"u": 0, "v": 1, "sign": 2}]}')
    with pytest.raises(ParseError):
        parse_graph_json("[")


def test_sample_files_agree():
    assert load_graph(sample("handcuff.txt")).graph == handcuff()
    assert load_graph(sample("handcuff.json")).graph == handcuff()


# -- command line -------------------------------------------------------------------

def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_poly_both_methods(capsys):
    code, out, _ = run(capsys, "poly", sample("handcuff.txt"), "--method", "both")
    assert code == 0 and out.strip() == "X*Z^2 + Y*Z - Z^2 - Y + Z"


def test_poly_trace(capsys):
    code, _, err = run(capsys, "poly", sample("handcuff.txt"), "--method", "dc", "--trace")
    assert code == 0 and "bridge+circuit-path" in err


def test_eval_point_and_meaning(capsys):
    assert run(capsys, "eval", sample("handcuff.txt"), "--point", "2,2,2")[:2] == (0, "8\n")
    code, out, _ = run(capsys, "eval", sample("negative_loop.txt"), "--meaning", "proper_n_colorings", "--n", "2")
    assert code == 0 and out.splitlines()[-1] == "4"
    code, _, err = run(capsys, "eval", sample("handcuff.txt"), "--point", "1,2")
    assert code == 2 and err.startswith("error:")


def test_count_both_agree(capsys):
    code, out, _ = run(capsys, "count", sample("handcuff.txt"), "flows", "--group", "Z3", "--nowhere-zero", "--both")
    assert code == 0 and out == "polynomial: 2\nbrute force: 2\n"


def test_count_variants(capsys):
    assert run(capsys, "count", sample("negative_loop.txt"), "ncolorings", "--n", "1")[:2] == (0, "2\n")
    code, out, _ = run(capsys, "count", sample("negative_loop.txt"), "pd", "--group", "Z4", "--nowhere-zero")
    assert code == 0 and out.strip().endswith("1")
    code, out, _ = run(capsys, "count", sample("two_components.txt"), "tensions", "--group", "Z4", "--nowhere-zero")
    assert code == 0 and "21" in out


def test_budget_exit_code(capsys):
    code, _, err = run(capsys, "count", sample("handcuff.txt"), "flows", "--group", "Z4", "--brute", "--budget", "5")
    assert code == 3 and "budget" in err


def test_budget_before_subcommand(capsys, monkeypatch):
    monkeypatch.delenv("SIGNEDTUTTE_BUDGET", raising=False)
    code, _, _ = run(capsys, "--budget", "5", "count", sample("handcuff.txt"), "flows", "--group", "Z4", "--brute")
    assert code == 3


def test_joint(capsys):
    code, out, _ = run(capsys, "joint", sample("k2_cycle.matroid"), sample("k2_cycle.matroid"))
    assert code == 0 and out.strip() == "X*Z - X"


def test_verify_names_violated_axiom(capsys):
    code, out, _ = run(capsys, "verify", sample("corrupted.matroid"))
    assert code == 1
    assert "FAIL matroid.axioms" in out and "unit increase" in out


def test_verify_graph_files_json(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(
        capsys, "verify", sample("handcuff.txt"), sample("u13.matroid"),
        "--groups", "Z3", "--json", "--summary-only", "--report", str(report),
    )
    assert code == 0
    data = json.loads(out)
    assert data["summary"]["failed"] == 0 and data["summary"]["total"] > 0
    assert json.loads(report.read_text())["summary"]["ok"] is True


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("v 2\ne 0 5 +\n")
    code, _, err = run(capsys, "poly", str(bad))
    assert code == 2 and "line 2" in err


def test_unknown_group(capsys):
    code, _, _ = run(capsys, "count", sample("handcuff.txt"), "flows", "--group", "Q8")
    assert code == 2

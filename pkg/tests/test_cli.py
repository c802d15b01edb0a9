"""Command-line interface: exit codes, worked examples, provenance,
determinism under --threads."""

import json

import pytest

from nhedral.cli import parse_element, parse_laurent, run
from nhedral.exactnum import LaurentZ, qfact
from nhedral.hecke import hecke


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_center_rank_example(capsys):
    code, out, _ = invoke(capsys, "center", "rank",
                          "--rank", "3", "--level", "3")
    assert code == 0 and out.strip() == "14"


def test_nhedral_dim_example(capsys):
    code, out, _ = invoke(capsys, "nhedral", "dim",
                          "--rank", "3", "--level", "3")
    assert code == 0 and out.strip() == "31"


def test_usage_errors_exit_2(capsys):
    assert run(["no-such-command"]) == 2
    assert run(["center", "rank", "--rank", "3"]) == 2  # missing --level
    code, _, err = invoke(capsys, "nhedral", "mult",
                          "--rank", "2", "--level", "2",
                          "--lhs", "C[0;0]", "--rhs", "C[banana]")
    assert code == 2 and "bad" in err


def test_guard_rails(capsys):
    code, _, err = invoke(capsys, "weights", "census",
                          "--rank", "7", "--level", "1")
    assert code == 2 and "--force" in err
    assert run(["weights", "census", "--rank", "2", "--level", "13"]) == 2
    assert run(["weights", "census", "--rank", "2", "--level", "13",
                "--force", "--out", "/dev/null"]) == 0


def test_verification_failure_exits_1(tmp_path, capsys):
    # the level-3 type A graph violates the level-2 vanishing ideal
    path = tmp_path / "a23.graph"
    assert run(["graph", "gen-a", "--rank", "2", "--level", "3",
                "--out", str(path)]) == 0
    code, out, _ = invoke(capsys, "graph", "verify",
                          "--rank", "2", "--level", "2", "--in", str(path))
    assert code == 1
    assert not json.loads(out)["ok"]


def test_compare_passes_and_reports(capsys):
    code, out, _ = invoke(capsys, "fourier", "compare",
                          "--rank", "2", "--order", "6")
    rep = json.loads(out)
    assert code == 0 and rep["failures"] == [] and rep["pass"]
    assert rep["convention_used"] == "m"


def test_threads_flag_does_not_change_output(capsys):
    args = ["fusion", "smatrix", "--rank", "3", "--level", "2"]
    _, base, _ = invoke(capsys, *args)
    _, threaded, _ = invoke(capsys, *args, "--threads", "8")
    assert base == threaded


def test_numeric_switch(capsys):
    code, out, _ = invoke(capsys, "fusion", "smatrix",
                          "--rank", "2", "--level", "1", "--numeric", "8")
    assert code == 0
    assert "z^" not in out and "j" in out


def test_provenance_header_on_emitted_files(tmp_path, capsys):
    path = tmp_path / "pts.csv"
    assert run(["koornwinder", "points", "--rank", "3", "--level", "2",
                "--out", str(path)]) == 0
    head = path.read_text().splitlines()[:4]
    assert head[0].startswith("# tool nhedral")
    assert any("N=3" in ln for ln in head)
    assert any("n=" in ln for ln in head)

    out = tmp_path / "r.json"
    assert run(["weights", "census", "--rank", "3", "--level", "2",
                "--out", str(out)]) == 0
    assert "provenance" in json.loads(out.read_text())


def test_svg_plot(tmp_path):
    path = tmp_path / "h.svg"
    assert run(["koornwinder", "plot", "--rank", "4", "--level", "2",
                "--out", str(path)]) == 0
    text = path.read_text()
    assert text.startswith("<!--") and "</svg>" in text


def test_graph_roundtrip_through_cli(tmp_path, capsys):
    path = tmp_path / "d.graph"
    assert run(["graph", "gen-d", "--rank", "3", "--level", "3",
                "--out", str(path)]) == 0
    code, out, _ = invoke(capsys, "graph", "spectrum", "--rank", "3",
                          "--level", "3", "--in", str(path))
    rep = json.loads(out)
    assert code == 0 and rep["supported_on_variety"]


# -- expression parsing ----------------------------------------------------

def test_parse_laurent():
    assert parse_laurent("v^-2+1") == LaurentZ({-2: 1, 0: 1})
    assert parse_laurent("2v^3-v") == LaurentZ({3: 2, 1: -1})
    assert parse_laurent("-3") == LaurentZ(-3)
    with pytest.raises(ValueError):
        parse_laurent("v^^2")


def test_parse_element_and_quadratic_relation(capsys):
    H = hecke(2, 2)
    th = parse_element("C[0;0]", H)
    sq = H.multiply(th, th)
    assert sq == {k: v * qfact(2) for k, v in th.items()}
    with pytest.raises(ValueError):
        parse_element("C[0;5]", H)  # weight outside the alcove

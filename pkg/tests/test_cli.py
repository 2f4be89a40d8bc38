import json
import subprocess
import sys

import pytest

from triroman import graph as G
from triroman.cli import build_report, main


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def _graph_file(tmp_path, g, name="g.txt"):
    return _write(tmp_path, name, G.to_edge_list(g))


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_verify_exit_codes(tmp_path, capsys):
    c5 = _write(tmp_path, "c5.txt", "0 1\n1 3\n3 4\n4 2\n2 0\n")
    assert main(["verify", c5, _write(tmp_path, "l", "3 0 0 2 2\n")]) == 0
    p3 = _graph_file(tmp_path, G.path(3), "p3.txt")
    capsys.readouterr()
    assert main(["verify", p3, _write(tmp_path, "l2", "1 3 0\n"), "--json"]) == 1
    out = _json(capsys)
    assert [v["vertex"] for v in out["results"]["violations"]] == [2]
    assert main(["verify", str(tmp_path / "missing"), p3]) == 2
    assert main(["verify", p3, _write(tmp_path, "l3", "1 9 0\n")]) == 2
    assert main(["verify", p3, _write(tmp_path, "l4", "1 1\n")]) == 2


def test_verify_other_k(tmp_path):
    p2 = _graph_file(tmp_path, G.path(2))
    assert main(["verify", p2, _write(tmp_path, "l", "2 0\n"), "--k", "1"]) == 0
    assert main(["verify", p2, _write(tmp_path, "l", "2 0\n"), "--k", "2"]) == 1


@pytest.mark.parametrize(
    "g,want,method",
    [(G.path(10), 15, "closedform"), (G.cycle(10), 14, "closedform")],
)
def test_solve_auto(tmp_path, capsys, g, want, method):
    assert main(["solve", _graph_file(tmp_path, g), "--json"]) == 0
    res = _json(capsys)["results"]
    assert res["weight"] == want and res["method"] == method


def test_solve_family_F(tmp_path, capsys):
    path = tmp_path / "f2.txt"
    assert main(["gen", "family_F", "2", "--hub-edges", "0-1", "--out", str(path)]) == 0
    assert main(["solve", str(path), "--json"]) == 0
    res = _json(capsys)["results"]
    assert res["weight"] == 14 and res["method"] == "treedp"


def test_closed_form_relabelled_path(tmp_path, capsys):
    g = G.Graph.from_edges(5, [(3, 0), (0, 4), (4, 1), (1, 2)])
    assert main(["solve", _graph_file(tmp_path, g), "--json"]) == 0
    res = _json(capsys)["results"]
    assert res["weight"] == 8 and res["method"] == "closedform"
    assert G.from_edge_list(G.to_edge_list(g)) == g


def test_solve_guards(tmp_path, capsys):
    c = _graph_file(tmp_path, G.cycle(20))
    assert main(["solve", c, "--method", "bruteforce"]) == 3
    assert "14" in capsys.readouterr().err
    assert main(["solve", c, "--method", "treedp"]) == 3
    assert main(["solve", _graph_file(tmp_path, G.star(5), "s"), "--method", "closedform"]) == 3
    assert main(["solve", _graph_file(tmp_path, G.cycle(41), "big"), "--method", "bnb"]) == 3
    big = G.cycle(41).add_edge(0, 20)
    assert main(["solve", _graph_file(tmp_path, big, "big2")]) == 3


def test_methods_agree(tmp_path, capsys):
    path = _graph_file(tmp_path, G.path(7))
    weights = set()
    for m in ("auto", "bruteforce", "bnb", "treedp", "closedform"):
        assert main(["solve", path, "--method", m, "--json"]) == 0
        weights.add(_json(capsys)["results"]["weight"])
    assert weights == {11}


def test_bound_cycle9(tmp_path, capsys):
    assert main(["bound", _graph_file(tmp_path, G.cycle(9)), "--json"]) == 0
    entries = {e["name"]: e for e in _json(capsys)["results"]["entries"]}
    assert entries["probabilistic"]["integer_value"] == 21
    assert entries["max_degree"]["integer_value"] == 22


def test_bound_star_and_tightness(tmp_path, capsys):
    assert main(["bound", _graph_file(tmp_path, G.star(5)), "--json"]) == 0
    res = _json(capsys)["results"]
    assert res["best_lower"] == res["best_upper"] == 4
    assert main(["bound", _graph_file(tmp_path, G.path(4)), "--json", "--list"]) == 0
    res = _json(capsys)["results"]
    entries = {e["name"]: e for e in res["entries"]}
    assert entries["max_degree"]["integer_value"] == 7 and entries["max_degree"]["tight"]
    assert not entries["girth"]["applicable"]


def test_bound_list_toggle(tmp_path, capsys):
    path = _graph_file(tmp_path, G.path(4))
    main(["bound", path, "--json"])
    short = _json(capsys)["results"]["entries"]
    main(["bound", path, "--json", "--list"])
    full = _json(capsys)["results"]["entries"]
    assert all(e["applicable"] for e in short) and len(full) > len(short)


def test_gen_then_solve_via_stdin(tmp_path):
    gen = subprocess.run(
        [sys.executable, "-m", "triroman", "gen", "cycle", "7"], capture_output=True, text=True, check=True
    )
    solved = subprocess.run(
        [sys.executable, "-m", "triroman", "solve", "-", "--json"],
        input=gen.stdout,
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(solved.stdout)["results"]["weight"] == 10


@pytest.mark.parametrize(
    "args",
    [
        ["path", "5"],
        ["star", "4"],
        ["double_star", "2", "3"],
        ["complete_bipartite", "2", "3"],
        ["spider", "1", "2"],
        ["gnp", "6", "0.5"],
        ["random_tree", "9"],
        ["family_H", "3"],
        ["family_F", "3"],
    ],
)
def test_gen_kinds(capsys, args):
    assert main(["gen", *args]) == 0
    G.from_edge_list(capsys.readouterr().out)


def test_gen_seed_reproducible(capsys):
    main(["gen", "random_tree", "12", "--seed", "4"])
    a = capsys.readouterr().out
    main(["gen", "random_tree", "12", "--seed", "4"])
    assert capsys.readouterr().out == a


def test_reduce_writes_sidecar(tmp_path, capsys):
    x3c = _write(tmp_path, "x.txt", "1 1\n0 1 2\n")
    out = tmp_path / "gadget.txt"
    assert main(["reduce", x3c, "--out", str(out)]) == 0
    side = json.loads((tmp_path / "gadget.txt.roles.json").read_text())
    assert side["threshold"] == 15 and len(side["roles"]) == 11
    assert G.from_edge_list(out.read_text()).p == 11
    assert main(["reduce", _write(tmp_path, "bad", "1 1\n0 1 5\n")]) == 2


def test_chain_c5(tmp_path, capsys):
    assert main(["chain", _graph_file(tmp_path, G.cycle(5)), "--json"]) == 0
    res = _json(capsys)["results"]
    assert (res["gamma"], res["gamma_R"], res["gamma_dR"], res["gamma_3R"]) == (2, 4, 6, 7)
    assert res["chain_holds"]
    assert main(["chain", _graph_file(tmp_path, G.cycle(13), "c13")]) == 3


def test_report_json_round_trip_and_digest(tmp_path, capsys):
    path = _graph_file(tmp_path, G.random_connected(12, 0.3, seed=1))
    main(["solve", path, "--method", "bnb", "--json"])
    text = capsys.readouterr().out
    report = json.loads(text)
    assert json.loads(json.dumps(report)) == report
    rebuilt = build_report(report["command"], report["inputs"], report["results"], {})
    assert rebuilt["digest"] == report["digest"]
    g = G.from_edge_list(open(path).read())
    from triroman.labeling import is_valid

    assert is_valid(g, report["results"]["witness"])


def test_human_output(tmp_path, capsys):
    main(["solve", _graph_file(tmp_path, G.path(4))])
    assert capsys.readouterr().out.startswith("gamma_3R = 7")

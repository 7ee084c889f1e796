import json

import pytest

from dikroma.cli import main
from dikroma.coloring import is_digrundy_coloring, parse_coloring
from dikroma.digraph import complete_symmetric, directed_cycle, directed_path, symmetric
from dikroma.formats import parse_digraph6, to_digraph6, to_edge_list


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, d in {"c3": directed_cycle(3), "p3": directed_path(3),
                    "k3": complete_symmetric(3), "k2": complete_symmetric(2),
                    "p4": symmetric(4, [(0, 1), (1, 2), (2, 3)]),
                    "dstar": symmetric(4, [(0, 1), (1, 3), (2, 3)])}.items():
        p = tmp_path / f"{name}.txt"
        p.write_text(to_edge_list(d))
        paths[name] = str(p)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name, expected", [
    ("c3", (2, 2, 2)), ("k3", (3, 3, 3)), ("p3", (1, 1, 2))])
def test_params(capsys, files, name, expected):
    code, out, _ = run(capsys, "params", files[name])
    data = json.loads(out)
    assert code == 0 and (data["dc"], data["dg"], data["dac"]) == expected


def test_params_with_dco_and_inline_digraph6(capsys):
    code, out, _ = run(capsys, "params", to_digraph6(directed_cycle(3)), "--with-dco")
    assert code == 0 and json.loads(out)["dco"] == 2


def test_params_csv_and_out_file(capsys, files, tmp_path):
    target = tmp_path / "r.csv"
    code, out, _ = run(capsys, "params", files["c3"], "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    header, row = target.read_text().splitlines()
    assert header.startswith("n,m,dc,dg,dac")
    assert row.startswith("3,3,2,2,2")


def test_greedy(capsys, files):
    code, out, _ = run(capsys, "greedy", files["c3"], "--order", "0,1,2")
    assert code == 0 and json.loads(out)["coloring"] == [1, 1, 2]
    code, out, _ = run(capsys, "greedy", files["k2"], "--order", "0,1")
    assert json.loads(out)["coloring"] == [1, 2]


def test_greedy_text_output_rereads(capsys, files):
    code, out, _ = run(capsys, "greedy", files["p4"], "--order", "0,3,1,2", "--format", "text")
    col = parse_coloring(out)
    assert is_digrundy_coloring(symmetric(4, [(0, 1), (1, 2), (2, 3)]), col)


def test_parsimonious_dstar(capsys, files):
    code, out, _ = run(capsys, "parsimonious", files["dstar"], "--order", "0,1,2,3")
    data = json.loads(out)
    assert code == 0 and data["k"] == 2
    assert {"step": 2, "vertex": 2, "color": 2} in data["trace"]


@pytest.mark.parametrize("order", ["0,1", "0,1,1", "a,b,c"])
def test_bad_order_exit_2(capsys, files, order):
    code, _, err = run(capsys, "greedy", files["c3"], "--order", order)
    assert code == 2 and "dikroma:" in err


def test_interpolate(capsys, files):
    code, out, _ = run(capsys, "interpolate", files["p4"], "--kind", "greedy")
    data = json.loads(out)
    assert code == 0 and sorted(data["witnesses"]) == ["2", "3"]
    d = symmetric(4, [(0, 1), (1, 2), (2, 3)])
    assert all(is_digrundy_coloring(d, c) for c in data["witnesses"].values())
    code, out, _ = run(capsys, "interpolate", files["p3"], "--kind", "complete")
    assert code == 0 and sorted(json.loads(out)["witnesses"]) == ["1", "2"]
    code, out, _ = run(capsys, "interpolate", "&@?")
    assert code == 0 and json.loads(out)["witnesses"] == {"1": [1]}


def test_input_errors_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 0\n")
    code, _, err = run(capsys, "params", str(bad))
    assert code == 2 and "line 2" in err
    code, _, err = run(capsys, "params", "&A_")
    assert code == 2 and "byte 2" in err
    code, _, _ = run(capsys, "params", str(tmp_path / "missing.txt"))
    assert code == 2


def test_caps_exit_3(capsys):
    big = to_digraph6(directed_cycle(17))
    assert run(capsys, "params", big)[0] == 3
    assert run(capsys, "params", to_digraph6(directed_cycle(8)), "--with-dco")[0] == 3


def test_time_budget_exit_3(capsys, monkeypatch):
    from dikroma.digraph import random_digraph
    monkeypatch.setenv("DIKROMA_TIME_BUDGET_MS", "0.000001")
    code, _, err = run(capsys, "params", to_digraph6(random_digraph(16, 0.5, 3)))
    assert code == 3 and "dikroma:" in err


def test_sweep_n2(capsys):
    code, out, _ = run(capsys, "sweep", "--n", "2", "--exhaustive", "--check", "all")
    data = json.loads(out)
    assert code == 0 and data["total"] == 4 and data["violations"] == []


def test_sweep_n9_ng_dg(capsys):
    code, out, _ = run(capsys, "sweep", "--n", "9", "--samples", "100", "--seed", "1",
                       "--check", "ng-dg")
    data = json.loads(out)
    assert code == 0 and data["extremal"]["ng-dg"]["bound"] == 12
    assert data["violations"] == []


def test_sweep_violation_exit_1_and_csv(capsys):
    code, out, _ = run(capsys, "sweep", "--n", "4", "--exhaustive", "--check", "ng-dg",
                       "--format", "csv")
    lines = out.splitlines()
    assert code == 1
    assert lines[0] == ("digraph6,n,m,dc,dc_c,dac,dac_c,dg,dg_c,dco,checks_passed,"
                        "violated_checks")
    assert len(lines) == 4097
    assert sum(line.endswith(",ng-dg") for line in lines) == 12


@pytest.mark.parametrize("argv", [
    ["sweep", "--n", "6", "--exhaustive"],
    ["sweep", "--n", "4"],
    ["sweep", "--exhaustive"],
    ["sweep", "--n", "4", "--exhaustive", "--samples", "5"],
    ["sweep", "--n", "4", "--exhaustive", "--check", "bogus"],
])
def test_sweep_config_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_witness_n4_ng_dc(capsys):
    code, out, _ = run(capsys, "witness", "--n", "4", "--target", "ng-dc")
    data = json.loads(out)
    assert code == 0 and data["max_sum"] == 5
    assert parse_digraph6(data["witnesses"][0]["digraph6"]) == complete_symmetric(4)


def test_text_formats(capsys, files):
    code, out, _ = run(capsys, "params", files["c3"], "--format", "text")
    assert "dc: 2" in out
    code, out, _ = run(capsys, "sweep", "--n", "3", "--exhaustive", "--format", "text")
    assert code == 0 and "violations: 0" in out

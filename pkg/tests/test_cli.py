import csv
import io
import json

import pytest

from ladderstrength import cli
from ladderstrength.exact import parse_rational
from ladderstrength.spectral import ConvergenceError

SUBCOMMANDS = {
    "spectrum": ["spectrum", "--model", "penta"],
    "spectrum-vectors": ["spectrum", "--vectors", "--dim", "4"],
    "ground": ["ground", "--v", "0.01"],
    "ground-series": ["ground", "--model", "penta", "--v", "1e-10", "--method", "series"],
    "series": ["series", "--model", "penta", "--ref", "2", "--order", "5"],
    "leading": ["leading", "--model", "custom", "--offsets", "1,3", "--ref", "2", "--dim", "9"],
    "strength": ["strength", "--operator", "T2", "--model", "penta"],
    "strength-table4": ["strength", "--mode", "table4"],
    "strength-full": ["strength", "--mode", "full_rs", "--operator", "T2", "--order", "8"],
    "table3": ["table3"],
    "table4": ["table4", "--printed"],
    "figures": ["figures", "--which", "fig4"],
    "sweep": ["sweep", "--v-list", "1000,100,10000"],
    "fitpower": ["fitpower", "--to", "2"],
}


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def csv_records(text):
    return list(csv.DictReader(io.StringIO(text)))


def same_value(csv_text, json_value):
    if isinstance(json_value, bool) or json_value is None:
        return False
    if isinstance(json_value, int):
        return int(csv_text) == json_value
    if isinstance(json_value, float):
        return float(csv_text) == json_value
    return csv_text == json_value


def json_records(argv, text):
    data = json.loads(text)
    if argv[0] == "series":
        return [dict(zip(cli.SERIES_COLUMNS, row)) for row in _series_rows(data)]
    return data


def _series_rows(d):
    rows = [[d["ref"], "energy", -1, k, c] for k, c in enumerate(d["energy"])]
    for n, amp in enumerate(d["amplitudes"]):
        rows += [[d["ref"], "amplitude", n, k, c] for k, c in enumerate(amp)]
    return rows


@pytest.mark.parametrize("name", sorted(SUBCOMMANDS))
def test_csv_json_round_trip(name, capsys):
    argv = SUBCOMMANDS[name]
    code, csv_out, _ = run(argv, capsys)
    assert code == 0
    code, json_out, _ = run(argv + ["--format", "json"], capsys)
    assert code == 0
    rows = csv_records(csv_out)
    recs = json_records(argv, json_out)
    assert len(rows) == len(recs) > 0
    for row, rec in zip(rows, recs):
        assert list(row) == list(rec)
        for key in row:
            assert same_value(row[key], rec[key]), (key, row[key], rec[key])


@pytest.mark.parametrize("name", sorted(SUBCOMMANDS))
def test_byte_determinism(name, capsys):
    first = run(SUBCOMMANDS[name], capsys)[1]
    second = run(SUBCOMMANDS[name], capsys)[1]
    assert first == second


def test_default_figure_is_tri_t1(capsys):
    code, out, _ = run(["figures"], capsys)
    rows = csv_records(out)
    assert code == 0
    assert out.splitlines()[0] == ",".join(cli.STRENGTH_COLUMNS)
    assert {(r["model"], r["operator"], r["v"]) for r in rows} == {("tri", "T1", "0.10000000000000001")}
    assert [int(r["to"]) for r in rows] == list(range(1, 11))
    assert float(rows[0]["e_star"]) > 1.0


def test_table3_columns(capsys):
    rows = csv_records(run(["table3"], capsys)[1])
    assert list(rows[0])[:5] == ["n", "m", "A_exact", "A_expression", "lnO2_at_1e-4"]
    assert rows[1]["A_exact"] == "-2/3" and rows[1]["m"] == "3"
    assert rows[9]["lnO2_at_1e-4"] == "-inf" and rows[9]["m"] == "none"


def test_series_json_schema(capsys):
    d = json.loads(run(["series", "--order", "3", "--format", "json"], capsys)[1])
    assert d["ref"] == 0
    assert d["energy"] == ["0/1", "0/1", "-1/1", "0/1"]
    assert [parse_rational(c) for c in d["amplitudes"][1]] == [0, -1, 0, parse_rational("1/2")]


def test_ground_numeric_list(capsys):
    rows = csv_records(run(["ground", "--model", "tri", "--v", "0.01"], capsys)[1])
    assert float(rows[1]["amplitude"]) == pytest.approx(-0.009999, rel=1e-3)


def test_sweep_sorted_by_coupling(capsys):
    rows = csv_records(run(["sweep", "--v-list", "1e4,1e2,1e3", "--to", "3"], capsys)[1])
    assert [float(r["v"]) for r in rows] == [100.0, 1000.0, 10000.0]
    assert {r["to"] for r in rows} == {"3"}


def test_gnuplot_script(tmp_path, capsys):
    out = tmp_path / "fig2.csv"
    script = tmp_path / "fig2.gp"
    code = cli.main(["figures", "--which", "fig2", "--output", str(out), "--gnuplot", str(script)])
    assert code == 0
    assert out.read_bytes().count(b"\r") == 0
    text = script.read_text()
    assert str(out) in text and "using 8:11" in text


@pytest.mark.parametrize("argv", [
    ["sweep", "--v-list", ""],
    ["sweep", "--v-list", "1,-2"],
    ["spectrum", "--bogus"],
    ["spectrum", "--model", "custom"],
    ["spectrum", "--model", "tri", "--offsets", "1,2"],
    ["spectrum", "--dim", "1"],
    ["series", "--ref", "11"],
    ["series", "--order", "0"],
    ["strength", "--to", "0"],
    ["strength", "--mode", "table4", "--from", "1"],
    ["figures", "--gnuplot", "x.gp"],
    ["fitpower", "--to", "2", "--u-list", "1e-3,1e-4"],
    ["nosuchcommand"],
])
def test_invalid_arguments_exit_2(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2
    assert out == ""
    assert err


def test_numerical_failure_exit_3(monkeypatch, capsys):
    def boom(h):
        raise ConvergenceError(1e-3, 100)

    monkeypatch.setattr(cli, "decompose", boom)
    code, _, err = run(["spectrum"], capsys)
    assert code == 3
    assert "1.000e-03" in err

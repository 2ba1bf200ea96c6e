import csv
import io
import json

import pytest

from jacsplit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_search_json_and_csv_agree(capsys):
    code, out = run(capsys, "search", "--p", "3", "--i", "1", "--bound", "20")
    assert code == 0
    rows = json.loads(out)["result"]["rows"]
    assert [r["ell"] for r in rows][:3] == [5, 7, 11]
    code, out = run(capsys, "search", "--p", "3", "--i", "1", "--bound", "20", "--format", "csv")
    parsed = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["ell"]) for r in parsed] == [r["ell"] for r in rows]
    assert [int(r["order"]) for r in parsed] == [r["order"] for r in rows]


def test_search_empty(capsys):
    code, out = run(capsys, "search", "--p", "3", "--bound", "4")
    assert code == 0 and json.loads(out)["result"]["rows"] == []


def test_decompose_passes(capsys):
    code, out = run(capsys, "decompose", "--p", "3", "--ell", "7", "--i", "2")
    assert code == 0
    res = json.loads(out)["result"]
    assert set(res) == {"params", "checks", "conclusion"}
    assert all(c["pass"] for c in res["checks"])


def test_output_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["decompose", "--p", "3", "--ell", "7", "--i", "2", "--out", str(a)])
    main(["decompose", "--p", "3", "--ell", "7", "--i", "2", "--out", str(b), "--workers", "1"])
    assert a.read_text() == b.read_text()


@pytest.mark.parametrize("argv,code,err", [
    (["decompose", "--p", "3", "--ell", "7", "--i", "1"], 2, "usage"),
    (["decompose", "--p", "3", "--ell", "7", "--i", "2", "--t", "2"], 2, "singular_parameter"),
    (["decompose", "--p", "3", "--ell", "5", "--i", "2"], 2, "precondition"),
    (["char2", "--r", "4"], 2, "usage"),
    (["decompose", "--p", "3", "--ell", "7"], 2, "usage"),
    (["zeta", "--p", "3", "--i", "2", "--ell", "7", "--t", "3", "--guard", "100"], 2, "usage"),
    (["zeta", "--p", "3", "--i", "6", "--ell", "7", "--t", "3", "--guard", "2000"], 2, "guard_exceeded"),
    (["bogus"], 2, "usage"),
])
def test_error_paths(capsys, argv, code, err):
    got, out = run(capsys, *argv)
    assert got == code
    assert json.loads(out)["error"]["code"] == err


def test_char2(capsys):
    code, out = run(capsys, "char2", "--r", "3")
    res = json.loads(out)["result"]
    assert code == 0 and res["params"]["mersenne"]
    code, out = run(capsys, "char2", "--r", "5", "--format", "text")
    assert code == 0 and "genus 15" in out


def test_ordinary_and_zeta(capsys):
    code, out = run(capsys, "ordinary", "--p", "3", "--ell", "5", "--i", "2", "--t", "0")
    assert code == 0 and json.loads(out)["result"]["ordinary"] is False
    code, out = run(capsys, "zeta", "--p", "3", "--i", "2", "--ell", "7", "--t", "0,1")
    res = json.loads(out)["result"]
    assert res["counts"] == [10, 82, 844] and res["prediction_ok"]
    code, out = run(capsys, "zeta", "--p", "3", "--i", "2", "--t", "3", "--curve", "E")
    assert json.loads(out)["result"]["charpoly"] == [9, 2, 1]


def test_twist(capsys):
    code, out = run(capsys, "twist", "--p", "3", "--ell", "7", "--i", "2", "--t", "3")
    res = json.loads(out)["result"]
    assert code == 0 and res["identity"] and res["witness_point"]
    assert res["rank"]["predicted_rank"] == 6


def test_guard_env(capsys, monkeypatch):
    monkeypatch.setenv("JACSPLIT_GUARD", "100000")
    code, out = run(capsys, "zeta", "--p", "3", "--i", "2", "--ell", "11", "--t", "3")
    assert code == 0
    # prediction count over F_{9^6} is skipped under the lowered guard
    assert json.loads(out)["result"]["prediction_ok"] is None

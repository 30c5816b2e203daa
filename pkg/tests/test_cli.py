from __future__ import annotations

import json
import subprocess
import sys

import pytest

from patternlab.cli import main, series_from_json, series_to_json
from patternlab.genfun import ft_series
from patternlab.permcore import parse_pattern_set


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    return json.loads(out)


def test_series_example(capsys):
    data = run_json(capsys, "series", "--avoid", "321", "--order", "6")
    assert data["coefficients"] == ["1", "1", "2", "3", "5", "8", "13"]
    assert data["pattern_set"] == "321" and data["order"] == 6


def test_series_round_trip(capsys):
    data = run_json(capsys, "series", "--avoid", "2413,321", "-N", "12", "--json")
    ts, s = series_from_json(data)
    assert ts == parse_pattern_set("321,2413")
    assert s == ft_series(ts, 12)
    assert series_to_json(ts, s) == data


def test_phi_example(capsys):
    assert run_json(capsys, "phi", "--path", "ULUDDLUD")["permutation"] == "52431687"
    assert run_json(capsys, "phi", "--perm", "52431687")["path"] == "ULUDDLUD"


def test_count_example(capsys):
    data = run_json(capsys, "count", "--avoid", "", "--n", "5")
    assert data["count"] == "21" and data["engine_agrees"]


def test_text_output(capsys):
    code, out, _ = run(capsys, "series", "--avoid", "321", "-N", "3", "--text")
    assert code == 0 and out.splitlines()[0].split() == ["n", "coefficient"]
    code, out, _ = run(capsys, "phi", "--path", "UD", "--text")
    assert out.strip() == "UD -> 21"


@pytest.mark.parametrize("argv, token", [
    (["series", "--avoid", "3x2", "-N", "4"], "'x'"),
    (["count", "--avoid", "122", "--n", "3"], "122"),
    (["phi", "--path", "ULQD"], "'Q'"),
    (["phi", "--perm", "3412"], "3412"),
    (["closed", "--layered", "2,a"], "'a'"),
    (["cf", "--stat", "avoid", "-N", "4"], "--m"),
])
def test_usage_errors(capsys, argv, token):
    code, out, err = run(capsys, *argv)
    assert code == 2 and token in err and out == ""


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["series", "--avoid", "321", "--order", "-3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_limit_flag(capsys):
    code, _, err = run(capsys, "count", "--avoid", "", "--n", "6", "--limit", "4")
    assert code == 2 and "limit" in err


def test_limit_env(capsys, monkeypatch):
    monkeypatch.setenv("PATTERNLAB_LIMIT", "3")
    code, _, err = run(capsys, "paths", "--n", "4")
    assert code == 2


def test_closed(capsys):
    data = run_json(capsys, "closed", "--family", "k...312", "--k", "3", "-N", "4")
    assert data["coefficients"] == ["1", "1", "2", "4", "8"]
    assert data["gf"] == {"num": ["1", "-1"], "den": ["1", "-2"]}
    data = run_json(capsys, "closed", "--layered", "2,2,2", "-N", "5")
    assert data["coefficients"] == [str(c) for c in ft_series(parse_pattern_set("214365"), 5)]


def test_cf(capsys):
    data = run_json(capsys, "cf", "--stat", "inv", "-N", "3")
    assert data["coefficients"][3] == ["1", "2", "0", "1"]


def test_occurrences(capsys):
    data = run_json(capsys, "occurrences", "--length", "3", "--r", "1", "-N", "6", "--check", "6")
    assert data["coefficients"] == data["oracle"]
    assert data["coefficients"][4] == "2"


def test_paths(capsys):
    data = run_json(capsys, "paths", "--n", "3")
    assert data["count"] == 4
    assert {"path": "ULD", "permutation": "321"} in data["paths"]


def test_conjecture(capsys):
    data = run_json(capsys, "conjecture", "--m", "3", "--l-max", "3", "-N", "10")
    assert data["symmetric"] and data["multisets_checked"] == 10
    data = run_json(capsys, "conjecture", "--m", "1")
    assert data["symmetric"]


def test_verify_tables_json(capsys):
    data = run_json(capsys, "verify-tables", "--n-max", "7")
    assert data["ok"] and len(data["rows"]) == 20
    assert [e["row"] for e in data["errata"]] == ["t3-34521"]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "patternlab.cli", "phi", "--path", "ULUDDLUD"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["permutation"] == "52431687"

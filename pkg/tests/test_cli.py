import json

import pandas as pd
import pytest

from c2v.cli import EXIT_FAIL, EXIT_INVALID, EXIT_OK, main
from c2v.report import SCHEMA_VERSION, TABLE_COLUMNS, render_report


def test_list_checks(capsys):
    assert main(["--list-checks"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 22
    assert lines[0].startswith("C1 ")


def test_list_corpus(capsys):
    assert main(["--list-corpus"]) == EXIT_OK
    names = capsys.readouterr().out.split()
    assert {"g2", "Wbar3", "w3_on_g", "a_rs", "f<r>"} <= set(names)


def test_unknown_check_exits_invalid(capsys):
    assert main(["--checks", "C99"]) == EXIT_INVALID
    assert "unknown check id: C99" in capsys.readouterr().err


def test_bad_level_range_exits_invalid(capsys):
    assert main(["--k", "ten"]) == EXIT_INVALID
    assert "verify:" in capsys.readouterr().err


def test_text_report(capsys):
    assert main(["--checks", "C5,C18"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "C5 " in out
    assert "k-free" in out
    assert out.rstrip().endswith("2 passed, 0 failed, 0 skipped")


def test_json_report_is_deterministic(tmp_path):
    documents = []
    for name in ("a.json", "b.json"):
        path = tmp_path / name
        assert main(["--checks", "C5,C9", "--k", "3,5", "--format", "json", "--out", str(path)]) == EXIT_OK
        document = json.loads(path.read_text(encoding="utf-8"))
        for result in document["results"]:
            result.pop("elapsed_ms")
        documents.append(document)
    first, second = documents
    assert first == second
    assert first["schema_version"] == SCHEMA_VERSION
    assert [(r["check_id"], r["k"], r["status"]) for r in first["results"]] == [
        ("C5", None, "pass"),
        ("C9", 3, "skipped"),
        ("C9", 5, "pass"),
    ]
    assert first["run_meta"]["summary"] == {"pass": 2, "fail": 0, "skipped": 1}
    assert first["run_meta"]["k_values"] == [3, 5]


def test_csv_report_has_table_columns(tmp_path):
    path = tmp_path / "tables.csv"
    assert main(["--checks", "C2", "--k", "5", "--format", "csv", "--out", str(path)]) == EXIT_OK
    frame = pd.read_csv(path)
    assert list(frame.columns) == TABLE_COLUMNS
    assert set(frame["match"]) == {"match"}
    assert set(frame["check_id"]) == {"C2"}


def test_mutation_makes_the_run_fail(capsys):
    assert main(["--checks", "C1", "--mutate", "g2:0"]) == EXIT_FAIL
    assert "FAIL" in capsys.readouterr().out


def test_render_report_rejects_unknown_format():
    with pytest.raises(ValueError):
        render_report([], "xml")

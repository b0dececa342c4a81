from __future__ import annotations

import json
import shutil

import pytest

from datalake_agent.cli import main


@pytest.fixture
def fx(universe, tmp_path):
    """A private copy of the session fixtures."""
    dst = tmp_path / "fx"
    shutil.copytree(universe.root, dst)
    return dst


def test_fixtures_summary_and_unchanged(tmp_path, capsys):
    out = tmp_path / "gen"
    assert main(["fixtures", "--seed", "0", "--out", str(out)]) == 0
    first = capsys.readouterr().out
    assert first.startswith("23 databases (5 materialized, 18 schema-only)")
    assert "small=42 medium=159 large=319" in first and "unchanged" not in first
    assert main(["fixtures", "--out", str(out)]) == 0
    assert "fixtures unchanged" in capsys.readouterr().out


def test_fixtures_bad_path(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert main(["fixtures", "--out", str(blocker / "sub")]) == 2
    assert "failed" in capsys.readouterr().err


def test_ask_agent_trace(fx, capsys):
    assert main(["ask", "--fixtures", str(fx), "How many races were held in 2015?"]) == 0
    out = capsys.readouterr().out
    assert out.count("] assistant") == 4
    assert "termination: answered after 4 turn(s)" in out
    assert "SQL: SELECT COUNT(*) FROM races WHERE year = 2015" in out
    assert "tokens: input=" in out and "calls=4" in out


def test_ask_direct(fx, capsys):
    assert main(["ask", "--fixtures", str(fx), "--method", "direct", "--setting", "large", "--question", "q?"]) == 0
    out = capsys.readouterr().out
    assert out.count("] assistant") == 1 and "calls=1" in out


def test_ask_usage_errors(fx, capsys):
    assert main(["ask", "--fixtures", str(fx), "--setting", "huge", "q"]) == 1
    assert main(["ask", "--fixtures", str(fx)]) == 1
    assert main(["ask", "--fixtures", str(fx), "--max-turns", "0", "q"]) == 1
    assert main(["nonsense"]) == 1


def test_ask_missing_fixtures(tmp_path, capsys):
    assert main(["ask", "--fixtures", str(tmp_path / "none"), "q"]) == 2
    assert "no fixtures" in capsys.readouterr().err


def test_bench_and_report(fx, tmp_path, capsys):
    run = tmp_path / "run"
    assert main(["bench", "--fixtures", str(fx), "--out", str(run), "--setting", "small", "--method", "direct"]) == 0
    assert "100 records" in capsys.readouterr().out
    assert main(["report", str(run), "--fixtures", str(fx), "--out", str(run), "--price-model", "o1"]) == 0
    out = capsys.readouterr().out
    assert "| direct | small   | 42     | all" in out
    assert json.loads((run / "report.json").read_text())["groups"]
    assert (run / "report.md").read_text() == out


def test_report_empty(tmp_path, capsys):
    (tmp_path / "records.jsonl").write_text("")
    assert main(["report", str(tmp_path)]) == 2
    assert "no records" in capsys.readouterr().err


def test_config_file_with_flag_override(fx, tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"fixtures": str(fx), "method": "direct", "setting": "medium"}))
    assert main(["--config", str(cfg), "ask", "q?"]) == 0
    assert "calls=1" in capsys.readouterr().out
    assert main(["--config", str(cfg), "ask", "--method", "agent", "q?"]) == 0
    assert "calls=4" in capsys.readouterr().out


def test_config_errors(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"colour": "blue"}))
    assert main(["--config", str(cfg), "ask", "q"]) == 1
    assert main(["--config", str(tmp_path / "missing.json"), "ask", "q"]) == 1

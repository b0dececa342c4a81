from __future__ import annotations

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import brute_force_equal, random_result_pair

from datalake_agent.bench import (
    PriceSheet,
    RunRecord,
    canonical_value,
    grade,
    load_records,
    report,
    results_match,
    run_benchmark,
)
from datalake_agent.catalog import QueryResult
from datalake_agent.llm import ScriptedChatModel, TokenUsage
from datalake_agent.schemafixtures import TaskSpec
from datalake_agent.solvers import SolverOutcome

RACES_2015 = TaskSpec("t", "How many races in 2015?", "f1", "simple", "SELECT COUNT(*) FROM races WHERE year = 2015")


def answer(sql, db="f1"):
    return SolverOutcome(sql, db, "answered", 1, TokenUsage())


class TestGrade:
    def test_paraphrase_is_correct(self, small):
        assert grade(small, RACES_2015, answer("SELECT count(year) FROM races WHERE year = 2015")) == "correct"

    def test_wrong_value(self, small):
        assert grade(small, RACES_2015, answer("SELECT COUNT(*) FROM races")) == "incorrect"

    def test_no_answer(self, small):
        out = SolverOutcome(None, None, "max_turns", 25, TokenUsage())
        assert grade(small, RACES_2015, out) == "no_answer"

    def test_failing_sql_and_wrong_db(self, catalogs):
        large = catalogs["large"]
        assert grade(large, RACES_2015, answer("SELECT nope FROM races")) == "incorrect"
        assert grade(large, RACES_2015, answer("DELETE FROM races")) == "incorrect"
        assert grade(large, RACES_2015, answer("SELECT COUNT(*) FROM races", db="motorsport_archive")) == "incorrect"
        assert grade(large, RACES_2015, answer("SELECT 1", db="missing")) == "incorrect"

    def test_row_order_ignored_without_order_by(self, small):
        task = TaskSpec("t", "q", "f1", "simple", "SELECT name FROM circuits")
        assert grade(small, task, answer("SELECT name FROM circuits ORDER BY name DESC")) == "correct"

    def test_row_order_matters_with_order_by(self, small):
        task = TaskSpec("t", "q", "f1", "simple", "SELECT name FROM circuits ORDER BY name")
        assert grade(small, task, answer("SELECT name FROM circuits ORDER BY name")) == "correct"
        assert grade(small, task, answer("SELECT name FROM circuits ORDER BY name DESC")) == "incorrect"

    def test_column_names_and_order_ignored(self, small):
        task = TaskSpec("t", "q", "f1", "simple", "SELECT circuit_id, name FROM circuits")
        assert grade(small, task, answer("SELECT name AS n, circuit_id AS i FROM circuits")) == "correct"

    def test_gold_against_itself(self, universe, small):
        for t in universe.tasks:
            assert grade(small, t, answer(t.gold_sql, t.target_db)) == "correct", t.id


class TestCanonical:
    def test_values(self):
        assert canonical_value(3) == canonical_value(3.0)
        assert canonical_value(0.1 + 0.2) == canonical_value(0.3)
        assert canonical_value(None) != canonical_value("NULL")
        assert canonical_value("1") != canonical_value(1)
        assert canonical_value("Abc") != canonical_value("abc")

    def test_multiset_counts_duplicates(self):
        a = QueryResult(["x"], [[1], [1], [2]])
        b = QueryResult(["x"], [[1], [2], [2]])
        assert not results_match(a, b, ordered=False)

    def test_agrees_with_brute_force(self):
        rng = random.Random(7)
        outcomes = set()
        for _ in range(300):
            g, p = random_result_pair(rng)
            ordered = rng.random() < 0.3
            width_g = len(g[0]) if g else 1
            width_p = len(p[0]) if p else 1
            expected = brute_force_equal(g, p, ordered)
            got = results_match(QueryResult([f"c{i}" for i in range(width_g)], g),
                                QueryResult([f"c{i}" for i in range(width_p)], p), ordered)
            assert got == expected, (g, p, ordered)
            outcomes.add(got)
        assert outcomes == {True, False}


def rec(method="agent", setting="large", difficulty="simple", tokens=100, graded="correct", source="estimated", out=10, task="t1"):
    return RunRecord(
        task_id=task, method=method, setting=setting, difficulty=difficulty, termination="answered",
        graded=graded, input_tokens=tokens, output_tokens=out, usage_source=source, turns=4,
        final_sql=None if graded == "no_answer" else "SELECT 1", target_db="f1", wall_time=0.1,
    )


O1 = PriceSheet({"o1": (15.0, 60.0)})


class TestReport:
    def test_single_record(self):
        r = report([rec(tokens=1234)], O1)
        row = next(g for g in r.groups if g["difficulty"] == "all")
        assert row["mean_input_tokens"] == 1234 and row["accuracy"] == 1.0 and row["mean_turns"] == 4
        assert r.costs[0]["input_cost_per_1000_tasks"] == pytest.approx(1234 * 15 / 1000)
        assert r.costs[0]["output_cost_per_1000_tasks"] == pytest.approx(10 * 60 / 1000)

    def test_delta_and_reduction(self):
        r = report([rec("agent", tokens=4264), rec("direct", tokens=34602)], O1)
        (c,) = r.comparisons
        assert c["cost_difference_per_1000_tasks"]["o1"] == pytest.approx(455.07, abs=1e-9)
        assert c["token_reduction"] == pytest.approx(1 - 4264 / 34602)

    def test_unknown_model_warns(self, caplog):
        r = report([rec()], O1, models=["o1", "mystery"])
        assert {c["model"] for c in r.costs} == {"o1"}
        assert any("mystery" in w for w in r.warnings)
        assert "mystery" in caplog.text

    def test_empty(self):
        with pytest.raises(ValueError):
            report([], O1)

    def test_mixed_sources_flagged(self):
        r = report([rec(source="api_reported"), rec(source="estimated", task="t2")], O1)
        assert any("mix" in w for w in r.warnings)

    def test_difficulty_counts_sum_to_total(self):
        rng = random.Random(3)
        records = [rec(rng.choice(["agent", "direct"]), rng.choice(["small", "large"]), rng.choice(["simple", "complex"]),
                       tokens=rng.randint(1, 9999), task=f"t{i}") for i in range(200)]
        r = report(records, O1)
        for key in {(g["method"], g["setting"]) for g in r.groups}:
            parts = [g for g in r.groups if (g["method"], g["setting"]) == key]
            total = next(g["tasks"] for g in parts if g["difficulty"] == "all")
            assert sum(g["tasks"] for g in parts if g["difficulty"] != "all") == total

    def test_text_and_json(self):
        r = report([rec("agent", tokens=4264), rec("direct", tokens=34602)], O1)
        text = r.to_text()
        assert "$455.07" in text and "87.7%" in text
        assert json.loads(r.to_json())["comparisons"][0]["setting"] == "large"


@settings(max_examples=100, deadline=None)
@given(
    tokens=st.lists(st.integers(0, 200_000), min_size=1, max_size=10),
    price=st.floats(0, 100, allow_nan=False),
    k=st.integers(1, 5),
)
def test_cost_is_linear(tokens, price, k):
    records = [rec(tokens=t, task=f"t{i}") for i, t in enumerate(tokens)]
    base = report(records, PriceSheet({"m": (price, 0.0)})).costs[0]["input_cost_per_1000_tasks"]
    scaled_price = report(records, PriceSheet({"m": (price * k, 0.0)})).costs[0]["input_cost_per_1000_tasks"]
    scaled_tokens = report([rec(tokens=t * k, task=f"t{i}") for i, t in enumerate(tokens)],
                           PriceSheet({"m": (price, 0.0)})).costs[0]["input_cost_per_1000_tasks"]
    assert scaled_price == pytest.approx(base * k)
    assert scaled_tokens == pytest.approx(base * k)
    assert base == pytest.approx(sum(tokens) / len(tokens) * price / 1000)


class TestPriceSheet:
    def test_load(self, tmp_path):
        p = tmp_path / "p.json"
        p.write_text(json.dumps({"models": {"o1": {"input_per_1m": 15, "output_per_1m": 60}}}))
        assert PriceSheet.load(p).prices == {"o1": (15.0, 60.0)}

    def test_negative(self):
        with pytest.raises(ValueError):
            PriceSheet({"x": (-1.0, 0.0)})

    def test_bad_file(self, tmp_path):
        p = tmp_path / "p.json"
        p.write_text("{}")
        with pytest.raises(ValueError):
            PriceSheet.load(p)


def strip_timing(path):
    out = []
    for line in path.read_text().splitlines():
        d = json.loads(line)
        d.pop("wall_time")
        out.append(json.dumps(d, sort_keys=True))
    return out


class Killer(ScriptedChatModel):
    """Scripted model that interrupts the run after a number of calls."""

    def __init__(self, transcripts, limit):
        super().__init__(transcripts)
        self.limit = limit

    def chat(self, messages, key=None):
        if self.calls >= self.limit:
            raise KeyboardInterrupt
        return super().chat(messages, key)


class TestRunBenchmark:
    @pytest.fixture
    def script(self, universe):
        return json.loads((universe.root / "gold_script.json").read_text())["transcripts"]

    def test_counts_and_grades(self, universe, script, tmp_path):
        tasks = universe.tasks[:10]
        records = run_benchmark(universe.manifest, tasks, ["small", "large"], ["agent", "direct"],
                                ScriptedChatModel(script), tmp_path)
        assert len(records) == 40
        assert all(r.graded == "correct" for r in records)
        assert len((tmp_path / "records.jsonl").read_text().splitlines()) == 40

    def test_resume_after_kill(self, universe, script, tmp_path):
        tasks = universe.tasks[:12]
        with pytest.raises(KeyboardInterrupt):
            run_benchmark(universe.manifest, tasks, ["small"], ["agent"], Killer(script, 30), tmp_path / "a")
        partial = load_records(tmp_path / "a" / "records.jsonl")
        assert 0 < len(partial) < 12
        records = run_benchmark(universe.manifest, tasks, ["small"], ["agent"], ScriptedChatModel(script), tmp_path / "a")
        assert len(records) == 12 and len({r.key for r in records}) == 12
        run_benchmark(universe.manifest, tasks, ["small"], ["agent"], ScriptedChatModel(script), tmp_path / "b")
        assert strip_timing(tmp_path / "a" / "records.jsonl") == strip_timing(tmp_path / "b" / "records.jsonl")

    def test_torn_line_dropped(self, universe, script, tmp_path):
        tasks = universe.tasks[:3]
        run_benchmark(universe.manifest, tasks, ["small"], ["direct"], ScriptedChatModel(script), tmp_path)
        path = tmp_path / "records.jsonl"
        lines = path.read_text().splitlines(keepends=True)
        path.write_text("".join(lines[:2]) + lines[2][:25])
        assert len(load_records(path)) == 2
        records = run_benchmark(universe.manifest, tasks, ["small"], ["direct"], ScriptedChatModel(script), tmp_path)
        assert len(records) == 3
        assert [json.loads(x)["task_id"] for x in path.read_text().splitlines()] == [t.id for t in tasks]

    def test_parallel_matches_serial(self, universe, script, tmp_path):
        tasks = universe.tasks[:20]
        run_benchmark(universe.manifest, tasks, ["medium"], ["agent", "direct"], ScriptedChatModel(script), tmp_path / "s")
        run_benchmark(universe.manifest, tasks, ["medium"], ["agent", "direct"], ScriptedChatModel(script), tmp_path / "p",
                      parallelism=4)
        assert strip_timing(tmp_path / "s" / "records.jsonl") == strip_timing(tmp_path / "p" / "records.jsonl")

    def test_model_failures_are_recorded(self, universe, tmp_path):
        records = run_benchmark(universe.manifest, universe.tasks[:2], ["small"], ["agent"],
                                ScriptedChatModel({}), tmp_path)
        assert [r.termination for r in records] == ["model_error"] * 2
        assert all(r.graded == "no_answer" for r in records)

    def test_unknown_method(self, universe, tmp_path):
        with pytest.raises(ValueError):
            run_benchmark(universe.manifest, universe.tasks[:1], ["small"], ["oracle"], ScriptedChatModel({}), tmp_path)


def test_record_invariant():
    with pytest.raises(ValueError):
        rec(graded="bogus")
    with pytest.raises(ValueError):
        RunRecord("t", "agent", "small", "simple", "answered", "no_answer", 1, 1, "estimated", 1, "SELECT 1", "f1", 0.0)

"""Benchmark harness: execution-accuracy grading, resumable runs, reports."""

from __future__ import annotations

import json
import logging
import re
import threading
import time
from collections import Counter, defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Callable, Iterable, Sequence

from .catalog import Catalog, CatalogError, DatabaseKind, QueryResult
from .llm import ChatModel
from .schemafixtures import SETTINGS, FixtureManifest, TaskSpec, load_tasks
from .solvers import Limits, PromptSet, SolverOutcome, serialize_catalog, solve_agent, solve_direct

log = logging.getLogger(__name__)

__all__ = [
    "GradeReport",
    "PriceSheet",
    "RunRecord",
    "TaskSpec",
    "canonical_value",
    "grade",
    "load_records",
    "load_tasks",
    "normalize_result",
    "report",
    "results_match",
    "run_benchmark",
]

METHODS = ("agent", "direct")
GRADES = ("correct", "incorrect", "no_answer")


# --------------------------------------------------------------------------
# Grading
# --------------------------------------------------------------------------


def canonical_value(v: Any) -> str:
    """Render a scalar so equal answers compare equal as strings.

    Integers print bare, reals with 9 significant digits, text keeps its case.
    Type prefixes keep NULL, numbers and text apart.
    """
    if v is None:
        return "null:"
    if isinstance(v, bool):
        v = int(v)
    if isinstance(v, int):
        return f"num:{v}"
    if isinstance(v, float):
        return f"num:{v:.9g}"
    if isinstance(v, bytes):
        return f"blob:{v.hex()}"
    return f"text:{v}"


def normalize_result(result: QueryResult, ordered: bool) -> list[tuple[str, ...]] | Counter:
    """Column names and column order are ignored; row order only if ``ordered``."""
    rows = [tuple(sorted(canonical_value(v) for v in row)) for row in result.rows]
    return rows if ordered else Counter(rows)


_ORDER_BY = re.compile(r"\border\s+by\b", re.IGNORECASE)


def results_match(gold: QueryResult, predicted: QueryResult, ordered: bool) -> bool:
    return normalize_result(gold, ordered) == normalize_result(predicted, ordered)


def grade(catalog: Catalog, task: TaskSpec, outcome: SolverOutcome) -> str:
    """``correct`` iff the predicted query returns the same result as the gold query."""
    if outcome.final_sql is None:
        return "no_answer"
    gold = catalog.execute_sql(task.target_db, task.gold_sql)
    try:
        if outcome.target_db is None or catalog.descriptor(outcome.target_db).kind is DatabaseKind.SCHEMA_ONLY:
            return "incorrect"
        predicted = catalog.execute_sql(outcome.target_db, outcome.final_sql)
    except CatalogError as exc:
        log.debug("task %s: predicted SQL failed: %s", task.id, exc)
        return "incorrect"
    ordered = bool(_ORDER_BY.search(task.gold_sql))
    return "correct" if results_match(gold, predicted, ordered) else "incorrect"


# --------------------------------------------------------------------------
# Records
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class RunRecord:
    task_id: str
    method: str
    setting: str
    difficulty: str
    termination: str
    graded: str
    input_tokens: int
    output_tokens: int
    usage_source: str
    turns: int
    final_sql: str | None
    target_db: str | None
    wall_time: float

    def __post_init__(self) -> None:
        if self.graded not in GRADES:
            raise ValueError(f"invalid grade {self.graded!r}")
        if (self.graded == "no_answer") != (self.final_sql is None):
            raise ValueError("graded=no_answer exactly when final_sql is absent")

    @property
    def key(self) -> tuple[str, str, str]:
        return (self.setting, self.method, self.task_id)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> RunRecord:
        return cls(**{k: d[k] for k in cls.__dataclass_fields__})


def load_records(path: str | Path, *, repair: bool = False) -> list[RunRecord]:
    """Read a records file. A torn trailing line (crash mid-write) is dropped;
    with ``repair`` the file is truncated to its last complete record."""
    path = Path(path)
    if not path.exists():
        return []
    raw = path.read_bytes()
    records: list[RunRecord] = []
    good_end = 0
    pos = 0
    for line in raw.splitlines(keepends=True):
        pos += len(line)
        if not line.endswith(b"\n"):
            break
        try:
            records.append(RunRecord.from_dict(json.loads(line)))
        except (ValueError, KeyError, TypeError):
            break
        good_end = pos
    if good_end < len(raw):
        log.warning("%s: ignoring %d trailing bytes of an incomplete record", path, len(raw) - good_end)
        if repair:
            with path.open("r+b") as f:
                f.truncate(good_end)
    return records


def run_benchmark(
    manifest: FixtureManifest,
    tasks: Sequence[TaskSpec],
    settings: Iterable[str],
    methods: Iterable[str],
    model: ChatModel | Callable[[], ChatModel],
    out_dir: str | Path,
    *,
    limits: Limits = Limits(),
    parallelism: int = 1,
    prompts: PromptSet | None = None,
) -> list[RunRecord]:
    """Solve and grade every (setting, method, task) triple.

    Records are appended to ``out_dir/records.jsonl`` in a fixed order as
    they complete; triples already present are skipped, so an interrupted
    run resumes where it stopped. ``model`` may be a factory, called once
    per setting and method.
    """
    settings, methods = list(settings), list(methods)
    for m in methods:
        if m not in METHODS:
            raise ValueError(f"unknown method {m!r}; valid: {', '.join(METHODS)}")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    records_path = out / "records.jsonl"
    existing = load_records(records_path, repair=True)
    done = {r.key for r in existing}
    prompts = prompts or PromptSet.load()
    lock = threading.Lock()
    new_records: list[RunRecord] = []

    with records_path.open("a", encoding="utf-8") as sink:
        for setting in settings:
            catalog = manifest.load_catalog(setting)
            serialized = serialize_catalog(catalog) if "direct" in methods else None
            for method in methods:
                pending = [t for t in tasks if (setting, method, t.id) not in done]
                if not pending:
                    continue
                chat_model = model() if callable(model) and not hasattr(model, "chat") else model

                def run_one(task: TaskSpec) -> RunRecord:
                    start = time.perf_counter()
                    if method == "agent":
                        outcome = solve_agent(catalog, task.question, chat_model, limits, prompts=prompts, task_id=task.id)
                    else:
                        outcome = solve_direct(
                            catalog, task.question, chat_model, prompts=prompts, task_id=task.id,
                            serialized_catalog=serialized,
                        )
                    graded = grade(catalog, task, outcome)
                    return RunRecord(
                        task_id=task.id,
                        method=method,
                        setting=setting,
                        difficulty=task.difficulty,
                        termination=outcome.termination,
                        graded=graded,
                        input_tokens=outcome.usage_total.input_tokens,
                        output_tokens=outcome.usage_total.output_tokens,
                        usage_source=outcome.usage_total.source,
                        turns=outcome.turns,
                        final_sql=outcome.final_sql,
                        target_db=outcome.target_db,
                        wall_time=round(time.perf_counter() - start, 6),
                    )

                def write(record: RunRecord) -> None:
                    with lock:
                        sink.write(record.to_json() + "\n")
                        sink.flush()
                        new_records.append(record)

                if parallelism <= 1:
                    for task in pending:
                        write(run_one(task))
                else:
                    with ThreadPoolExecutor(max_workers=parallelism) as pool:
                        # map yields in submission order: the file order stays deterministic
                        for record in pool.map(run_one, pending):
                            write(record)
    return existing + new_records


# --------------------------------------------------------------------------
# Reporting
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class PriceSheet:
    """USD per million tokens, per model."""

    prices: dict[str, tuple[float, float]]

    def __post_init__(self) -> None:
        for name, (inp, outp) in self.prices.items():
            if inp < 0 or outp < 0:
                raise ValueError(f"negative price for {name!r}")

    @classmethod
    def load(cls, path: str | Path) -> PriceSheet:
        """``{"models": {"o1": {"input_per_1m": 15.0, "output_per_1m": 60.0}, ...}}``"""
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        models = data.get("models") if isinstance(data, dict) else None
        if not isinstance(models, dict):
            raise ValueError(f"{path}: price sheet needs a 'models' object")
        return cls({
            name: (float(p["input_per_1m"]), float(p.get("output_per_1m", 0.0)))
            for name, p in models.items()
        })


def cost_per_1000_tasks(mean_tokens: float, price_per_1m: float) -> float:
    return mean_tokens * 1000 * price_per_1m / 1_000_000


@dataclass
class GradeReport:
    groups: list[dict[str, Any]]
    costs: list[dict[str, Any]]
    comparisons: list[dict[str, Any]]
    per_task_tokens: list[dict[str, Any]]
    warnings: list[str]

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        return render_report_text(self)


def _setting_order(s: str) -> tuple[int, str]:
    return (SETTINGS.index(s) if s in SETTINGS else len(SETTINGS), s)


def report(
    records: Sequence[RunRecord],
    price_sheet: PriceSheet,
    models: Sequence[str] | None = None,
    table_counts: dict[str, int] | None = None,
) -> GradeReport:
    """Aggregate accuracy, tokens and projected cost.

    Cost per 1000 tasks uses mean input tokens per task only; output-token
    cost is listed separately. ``models`` restricts the priced models;
    names missing from the sheet are skipped with a warning.
    """
    if not records:
        raise ValueError("no records to report on")
    warnings: list[str] = []
    if models is None:
        models = sorted(price_sheet.prices)
    priced = []
    for m in models:
        if m in price_sheet.prices:
            priced.append(m)
        else:
            msg = f"model {m!r} not in price sheet; cost column omitted"
            log.warning(msg)
            warnings.append(msg)

    by_group: dict[tuple[str, str, str], list[RunRecord]] = defaultdict(list)
    for r in records:
        by_group[(r.method, r.setting, r.difficulty)].append(r)
        by_group[(r.method, r.setting, "all")].append(r)

    groups = []
    for (method, setting, difficulty), rs in sorted(
        by_group.items(), key=lambda kv: (kv[0][0], _setting_order(kv[0][1]), kv[0][2] == "all", kv[0][2])
    ):
        sources = sorted({r.usage_source for r in rs})
        if len(sources) > 1 or "mixed" in sources:
            msg = f"{method}/{setting}/{difficulty}: token counts mix sources {sources}"
            if msg not in warnings:
                warnings.append(msg)
        n = len(rs)
        groups.append({
            "method": method,
            "setting": setting,
            "tables": (table_counts or {}).get(setting),
            "difficulty": difficulty,
            "tasks": n,
            "correct": sum(r.graded == "correct" for r in rs),
            "no_answer": sum(r.graded == "no_answer" for r in rs),
            "accuracy": sum(r.graded == "correct" for r in rs) / n,
            "mean_input_tokens": sum(r.input_tokens for r in rs) / n,
            "mean_output_tokens": sum(r.output_tokens for r in rs) / n,
            "mean_turns": sum(r.turns for r in rs) / n,
            "token_sources": sources,
        })

    overall = {(g["method"], g["setting"]): g for g in groups if g["difficulty"] == "all"}
    costs = []
    for (method, setting), g in sorted(overall.items(), key=lambda kv: (kv[0][0], _setting_order(kv[0][1]))):
        for m in priced:
            inp, outp = price_sheet.prices[m]
            costs.append({
                "method": method,
                "setting": setting,
                "model": m,
                "input_cost_per_1000_tasks": cost_per_1000_tasks(g["mean_input_tokens"], inp),
                "output_cost_per_1000_tasks": cost_per_1000_tasks(g["mean_output_tokens"], outp),
            })

    comparisons = []
    for setting in sorted({s for _, s in overall}, key=_setting_order):
        agent, direct = overall.get(("agent", setting)), overall.get(("direct", setting))
        if not agent or not direct:
            continue
        a_tok, d_tok = agent["mean_input_tokens"], direct["mean_input_tokens"]
        comparisons.append({
            "setting": setting,
            "agent_mean_input_tokens": a_tok,
            "direct_mean_input_tokens": d_tok,
            "token_reduction": 1 - a_tok / d_tok if d_tok else None,
            "direct_to_agent_ratio": d_tok / a_tok if a_tok else None,
            "cost_difference_per_1000_tasks": {
                m: cost_per_1000_tasks(d_tok - a_tok, price_sheet.prices[m][0]) for m in priced
            },
        })

    per_task = [
        {"setting": r.setting, "method": r.method, "task_id": r.task_id, "input_tokens": r.input_tokens}
        for r in sorted(records, key=lambda r: (_setting_order(r.setting), r.task_id, r.method))
    ]
    return GradeReport(groups, costs, comparisons, per_task, warnings)


def _table(headers: list[str], rows: list[list[Any]]) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    fmt = lambda r: "| " + " | ".join(c.ljust(w) for c, w in zip(r, widths)) + " |"  # noqa: E731
    sep = "|" + "|".join("-" * (w + 2) for w in widths) + "|"
    return "\n".join([fmt(cells[0]), sep] + [fmt(r) for r in cells[1:]])


def render_report_text(rep: GradeReport) -> str:
    parts = ["## Accuracy and tokens by method, setting and difficulty", ""]
    parts.append(_table(
        ["method", "setting", "tables", "difficulty", "tasks", "correct", "accuracy", "mean input tok", "mean turns"],
        [[g["method"], g["setting"], g["tables"] if g["tables"] is not None else "-", g["difficulty"], g["tasks"],
          g["correct"], f"{g['accuracy']:.1%}", f"{g['mean_input_tokens']:.1f}", f"{g['mean_turns']:.2f}"]
         for g in rep.groups],
    ))
    if rep.comparisons:
        parts += ["", "## Agent vs direct (mean input tokens per task)", ""]
        models = sorted({m for c in rep.comparisons for m in c["cost_difference_per_1000_tasks"]})
        parts.append(_table(
            ["setting", "agent", "direct", "reduction"] + [f"Δ cost/1000 ({m})" for m in models],
            [[c["setting"], f"{c['agent_mean_input_tokens']:.1f}", f"{c['direct_mean_input_tokens']:.1f}",
              f"{c['token_reduction']:.1%}" if c["token_reduction"] is not None else "-"]
             + [f"${c['cost_difference_per_1000_tasks'][m]:.2f}" for m in models]
             for c in rep.comparisons],
        ))
    if rep.costs:
        parts += ["", "## Projected cost per 1000 tasks (USD)", ""]
        parts.append(_table(
            ["method", "setting", "model", "input cost", "output cost"],
            [[c["method"], c["setting"], c["model"], f"{c['input_cost_per_1000_tasks']:.2f}",
              f"{c['output_cost_per_1000_tasks']:.2f}"] for c in rep.costs],
        ))
    if rep.warnings:
        parts += ["", "## Warnings", ""] + [f"- {w}" for w in rep.warnings]
    return "\n".join(parts) + "\n"

"""Deterministic evaluation universe: five materialized databases, eighteen
schema-only distractors, three nested settings and the task file.

Output layout under ``out_dir``::

    manifest.json
    catalog_small.json  catalog_medium.json  catalog_large.json
    databases/<id>.sqlite
    schemas/<id>.json
    tasks.jsonl
    gold_script.json     # scripted-model replies that replay the gold SQL
"""

from __future__ import annotations

import hashlib
import json
import logging
import random
import sqlite3
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from ..catalog import Catalog, CatalogError, load_catalog
from ..protocol import DBQueryFinalSQL, GetColumns, GetDBDescription, GetTables, render_command
from .dsl import create_table_sql, parse_tables
from .materialized import GENERATORS, MATERIALIZED
from .simulated import SIMULATED_SCHEMAS
from .tasks import TASK_DEFS

log = logging.getLogger(__name__)

__all__ = [
    "FixtureManifest",
    "SETTINGS",
    "SettingSpec",
    "TaskGenerationError",
    "TaskSpec",
    "generate_all",
    "generate_fixtures",
    "generate_tasks",
    "load_tasks",
    "write_gold_script",
]

SETTINGS = ("small", "medium", "large")
EXPECTED_TABLES = {"small": 42, "medium": 159, "large": 319}
DIFFICULTIES = ("simple", "complex")


@dataclass(frozen=True)
class SettingSpec:
    name: str
    table_count: int
    db_ids: list[str]


@dataclass(frozen=True)
class TaskSpec:
    id: str
    question: str
    target_db: str
    difficulty: str
    gold_sql: str

    def to_dict(self) -> dict[str, str]:
        return {
            "id": self.id,
            "question": self.question,
            "db_id": self.target_db,
            "difficulty": self.difficulty,
            "gold_sql": self.gold_sql,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> TaskSpec:
        if d.get("difficulty") not in DIFFICULTIES:
            raise ValueError(f"task {d.get('id')!r}: difficulty must be one of {DIFFICULTIES}")
        return cls(d["id"], d["question"], d["db_id"], d["difficulty"], d["gold_sql"])


class TaskGenerationError(RuntimeError):
    pass


@dataclass
class FixtureManifest:
    databases: list[dict[str, Any]]
    generation_seed: int
    setting_membership: dict[str, list[str]]
    root: Path | None = field(default=None, compare=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "generation_seed": self.generation_seed,
            "databases": self.databases,
            "setting_membership": self.setting_membership,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    @classmethod
    def load(cls, path: str | Path) -> FixtureManifest:
        path = Path(path)
        if path.is_dir():
            path = path / "manifest.json"
        data = json.loads(path.read_text(encoding="utf-8"))
        return cls(data["databases"], data["generation_seed"], data["setting_membership"], root=path.parent)

    def database(self, db_id: str) -> dict[str, Any]:
        for db in self.databases:
            if db["db_id"] == db_id:
                return db
        raise KeyError(db_id)

    def setting(self, name: str) -> SettingSpec:
        if name not in self.setting_membership:
            raise KeyError(f"unknown setting {name!r}; valid: {', '.join(SETTINGS)}")
        ids = self.setting_membership[name]
        return SettingSpec(name, sum(len(self.database(i)["tables"]) for i in ids), list(ids))

    def settings(self) -> list[SettingSpec]:
        return [self.setting(s) for s in SETTINGS]

    def catalog_path(self, setting: str) -> Path:
        if self.root is None:
            raise ValueError("manifest has no root directory")
        self.setting(setting)
        return self.root / f"catalog_{setting}.json"

    def load_catalog(self, setting: str) -> Catalog:
        return load_catalog(self.catalog_path(setting))

    def table_names(self, db_id: str | None = None) -> set[str]:
        return {
            t["name"]
            for db in self.databases
            if db_id is None or db["db_id"] == db_id
            for t in db["tables"]
        }

    def column_names(self, db_id: str | None = None) -> set[str]:
        return {
            c["name"]
            for db in self.databases
            if db_id is None or db["db_id"] == db_id
            for t in db["tables"]
            for c in t["columns"]
        }


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _write_sqlite(path: Path, tables: list[dict[str, Any]], rows: dict[str, list[tuple]]) -> dict[str, int]:
    if path.exists():
        path.unlink()
    conn = sqlite3.connect(path)
    counts = {}
    try:
        with conn:
            for t in tables:
                conn.execute(create_table_sql(t))
                data = rows[t["name"]]
                if data:
                    marks = ", ".join("?" * len(t["columns"]))
                    conn.executemany(f'INSERT INTO "{t["name"]}" VALUES ({marks})', data)
                counts[t["name"]] = len(data)
    finally:
        conn.close()
    return counts


def _table_entry(t: dict[str, Any], row_count: int | None) -> dict[str, Any]:
    return {"name": t["name"], "row_count": row_count, "columns": t["columns"]}


def generate_fixtures(seed: int, out_dir: str | Path) -> FixtureManifest:
    """Write databases, schema documents, per-setting catalog configs and the manifest."""
    out = Path(out_dir)
    (out / "databases").mkdir(parents=True, exist_ok=True)
    (out / "schemas").mkdir(parents=True, exist_ok=True)

    databases: list[dict[str, Any]] = []
    for spec in MATERIALIZED:
        tables = parse_tables(spec["tables"])
        rng = random.Random(f"{seed}:{spec['id']}")
        rows = GENERATORS[spec["id"]](rng)
        missing = {t["name"] for t in tables} ^ set(rows)
        if missing:
            raise AssertionError(f"{spec['id']}: generator/table mismatch {sorted(missing)}")
        rel = f"databases/{spec['id']}.sqlite"
        counts = _write_sqlite(out / rel, tables, rows)
        databases.append({
            "db_id": spec["id"],
            "kind": "materialized",
            "name": spec["name"],
            "domain_tag": spec["domain_tag"],
            "description": spec["description"],
            "path": rel,
            "sha256": _sha256(out / rel),
            "tables": [_table_entry(t, counts[t["name"]]) for t in tables],
        })

    membership = {"small": [d["db_id"] for d in databases], "medium": [], "large": []}
    for spec in SIMULATED_SCHEMAS:
        tables = parse_tables(spec["tables"])
        doc = {
            "id": spec["id"],
            "name": spec["name"],
            "description": spec["description"],
            "domain_tag": spec["domain_tag"],
            "tables": tables,
        }
        rel = f"schemas/{spec['id']}.json"
        (out / rel).write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
        databases.append({
            "db_id": spec["id"],
            "kind": "schema_only",
            "name": spec["name"],
            "domain_tag": spec["domain_tag"],
            "description": spec["description"],
            "path": rel,
            "sha256": _sha256(out / rel),
            "tables": [_table_entry(t, None) for t in tables],
        })
        if spec["setting"] == "medium":
            membership["medium"].append(spec["id"])

    membership["medium"] = membership["small"] + membership["medium"]
    membership["large"] = [d["db_id"] for d in databases]

    manifest = FixtureManifest(databases, seed, membership, root=out)
    for name in SETTINGS:
        spec = manifest.setting(name)
        if spec.table_count != EXPECTED_TABLES[name]:
            raise AssertionError(f"setting {name} has {spec.table_count} tables, expected {EXPECTED_TABLES[name]}")
        config = {
            "databases": [
                {k: db[k] for k in ("kind", "path", "name", "description", "domain_tag")} | {"id": db["db_id"]}
                for db in databases
                if db["db_id"] in spec.db_ids
            ]
        }
        (out / f"catalog_{name}.json").write_text(json.dumps(config, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    (out / "manifest.json").write_text(manifest.to_json(), encoding="utf-8")
    return manifest


def generate_tasks(manifest: FixtureManifest, out_path: str | Path) -> list[TaskSpec]:
    """Write the task file, aborting if any gold query fails on its fixture."""
    catalog = manifest.load_catalog("small")
    tasks: list[TaskSpec] = []
    counters: dict[tuple[str, str], int] = {}
    for db_id, difficulty, question, sql in TASK_DEFS:
        n = counters[(db_id, difficulty)] = counters.get((db_id, difficulty), 0) + 1
        task = TaskSpec(f"{db_id}-{difficulty[0]}{n:02d}", question, db_id, difficulty, sql)
        try:
            result = catalog.execute_sql(db_id, sql)
        except CatalogError as exc:
            raise TaskGenerationError(f"gold SQL of task {task.id} fails: {exc}") from exc
        if not result.rows or all(v is None for v in result.rows[0]):
            log.warning("task %s: gold SQL returns no data", task.id)
        tasks.append(task)
    out = Path(out_path)
    out.write_text("".join(json.dumps(t.to_dict(), sort_keys=True) + "\n" for t in tasks), encoding="utf-8")
    return tasks


def load_tasks(path: str | Path) -> list[TaskSpec]:
    tasks = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.strip():
            tasks.append(TaskSpec.from_dict(json.loads(line)))
    return tasks


def gold_agent_turns(catalog: Catalog, task: TaskSpec) -> list[str]:
    """Replies of a model that explores the way the method intends, then answers with gold SQL."""
    turns = [
        "I should first see which databases exist.\n" + render_command(GetDBDescription()),
        f"The '{task.target_db}' database fits the question.\n" + render_command(GetTables(task.target_db)),
    ]
    for table in sorted(catalog.referenced_tables(task.target_db, task.gold_sql)):
        turns.append(render_command(GetColumns(task.target_db, table)))
    turns.append("I have what I need.\n" + render_command(DBQueryFinalSQL(task.target_db, task.gold_sql)))
    return turns


def write_gold_script(manifest: FixtureManifest, tasks: list[TaskSpec], out_path: str | Path) -> dict[str, list[str]]:
    catalog = manifest.load_catalog("small")
    transcripts: dict[str, list[str]] = {}
    for task in tasks:
        transcripts[f"agent:{task.id}"] = gold_agent_turns(catalog, task)
        transcripts[f"direct:{task.id}"] = [render_command(DBQueryFinalSQL(task.target_db, task.gold_sql))]
    # default transcripts for ad-hoc questions
    canned = next(t for t in tasks if t.target_db == "f1" and "2015" in t.question)
    transcripts["agent"] = gold_agent_turns(catalog, canned)
    transcripts["direct"] = transcripts[f"direct:{canned.id}"]
    Path(out_path).write_text(
        json.dumps({"transcripts": transcripts}, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )
    return transcripts


def generate_all(seed: int, out_dir: str | Path) -> tuple[FixtureManifest, list[TaskSpec]]:
    out = Path(out_dir)
    manifest = generate_fixtures(seed, out)
    tasks = generate_tasks(manifest, out / "tasks.jsonl")
    write_gold_script(manifest, tasks, out / "gold_script.json")
    return manifest, tasks

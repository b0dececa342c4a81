"""Command-line entry point: ``datalake-agent {fixtures,ask,bench,report}``.

Every option may also come from a JSON file given with ``--config``; flags
given on the command line win over the file.
Exit codes: 0 success, 1 usage error, 2 runtime failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from importlib import resources
from pathlib import Path
from typing import Any, Sequence

from . import bench
from .catalog import CatalogError, CatalogLoadError, DatabaseKind
from .llm import LLMError, ModelConfig, build_model
from .protocol import render_query_result
from .schemafixtures import SETTINGS, FixtureManifest, TaskGenerationError, generate_all, load_tasks
from .solvers import Limits, solve_agent, solve_direct

log = logging.getLogger(__name__)

EXIT_OK, EXIT_USAGE, EXIT_RUNTIME = 0, 1, 2

DEFAULTS: dict[str, Any] = {
    "seed": 0,
    "out": None,
    "fixtures": "fixtures",
    "tasks": None,
    "setting": None,
    "method": None,
    "model": ModelConfig.model_name,
    "temperature": ModelConfig.temperature,
    "endpoint": ModelConfig.endpoint,
    "script": None,
    "api_key_env": ModelConfig.api_key_env,
    "parallelism": 1,
    "max_turns": Limits.max_turns,
    "repeat_threshold": Limits.repeat_threshold,
    "prices": None,
    "question": None,
    "records": None,
    "price_model": None,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _model_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--model", help="model name sent to the endpoint (default gpt-4o-mini)")
    p.add_argument("--temperature", type=float, help="sampling temperature (default 0.1)")
    p.add_argument(
        "--endpoint",
        help="base URL of an OpenAI-compatible API, or 'scripted' to replay a script file (default)",
    )
    p.add_argument("--script", help="script file for the scripted model (default: <fixtures>/gold_script.json)")
    p.add_argument("--api-key-env", dest="api_key_env", help="environment variable holding the API key")
    p.add_argument("--max-turns", dest="max_turns", type=int, help="agent turn limit (default 25)")
    p.add_argument(
        "--repeat-threshold", dest="repeat_threshold", type=int,
        help="repeated requests before a final answer is demanded (default 10)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="datalake-agent", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="JSON file with option values")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("fixtures", help="generate databases, catalogs and tasks")
    p.add_argument("--seed", type=int, help="generation seed (default 0)")
    p.add_argument("--out", help="output directory (default: fixtures)")

    p = sub.add_parser("ask", help="answer one question and print the trace")
    p.add_argument("question_arg", nargs="?", metavar="QUESTION")
    p.add_argument("--question")
    p.add_argument("--fixtures", help="fixture directory (default: fixtures)")
    p.add_argument("--setting", choices=SETTINGS, help="default: small")
    p.add_argument("--method", choices=bench.METHODS, help="default: agent")
    _model_flags(p)

    p = sub.add_parser("bench", help="run the benchmark and write records")
    p.add_argument("--fixtures", help="fixture directory (default: fixtures)")
    p.add_argument("--tasks", help="task file (default: <fixtures>/tasks.jsonl)")
    p.add_argument("--setting", choices=SETTINGS, action="append", help="repeatable; default: all")
    p.add_argument("--method", choices=bench.METHODS, action="append", help="repeatable; default: both")
    p.add_argument("--parallelism", type=int)
    p.add_argument("--out", help="run directory holding records.jsonl (default: runs)")
    p.add_argument("--prices", help="also write a report using this price sheet")
    _model_flags(p)

    p = sub.add_parser("report", help="aggregate records into accuracy, token and cost tables")
    p.add_argument("records", nargs="?", help="records.jsonl or a run directory (default: runs)")
    p.add_argument("--prices", help="price sheet JSON (default: bundled example sheet)")
    p.add_argument("--price-model", dest="price_model", action="append", help="restrict cost columns to these models")
    p.add_argument("--fixtures", help="fixture directory, used to label settings with table counts")
    p.add_argument("--out", help="directory for report.md and report.json")
    return parser


def _merge(args: argparse.Namespace) -> dict[str, Any]:
    opts = dict(DEFAULTS)
    if args.config:
        try:
            loaded = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except OSError as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise UsageError(f"config {args.config} is not valid JSON: {exc}") from exc
        if not isinstance(loaded, dict):
            raise UsageError("config file must hold a JSON object")
        unknown = set(loaded) - set(DEFAULTS)
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        opts.update(loaded)
    for key, value in vars(args).items():
        if value is not None and key in DEFAULTS:
            opts[key] = value
    if getattr(args, "question_arg", None):
        opts["question"] = args.question_arg
    for key in ("max_turns", "repeat_threshold", "parallelism"):
        if int(opts[key]) < 1:
            raise UsageError(f"{key.replace('_', '-')} must be at least 1")
    return opts


def _model_config(opts: dict[str, Any], fixtures: Path) -> ModelConfig:
    script = opts["script"]
    if opts["endpoint"] == "scripted" and script is None:
        script = str(fixtures / "gold_script.json")
    return ModelConfig(
        model_name=opts["model"],
        temperature=float(opts["temperature"]),
        endpoint=opts["endpoint"],
        script_path=script,
        api_key_env=opts["api_key_env"],
    )


def _load_manifest(fixtures: Path) -> FixtureManifest:
    if not (fixtures / "manifest.json").exists():
        raise FileNotFoundError(f"no fixtures in {fixtures}; run 'datalake-agent fixtures --out {fixtures}' first")
    return FixtureManifest.load(fixtures)


def cmd_fixtures(opts: dict[str, Any]) -> int:
    out = Path(opts["out"] or "fixtures")
    manifest_path = out / "manifest.json"
    previous = manifest_path.read_text(encoding="utf-8") if manifest_path.exists() else None
    manifest, tasks = generate_all(int(opts["seed"]), out)
    n_mat = sum(db["kind"] == DatabaseKind.MATERIALIZED.value for db in manifest.databases)
    counts = " ".join(f"{s.name}={s.table_count}" for s in manifest.settings())
    print(
        f"{len(manifest.databases)} databases ({n_mat} materialized, {len(manifest.databases) - n_mat} schema-only); "
        f"tables per setting: {counts}; {len(tasks)} tasks; seed {manifest.generation_seed} -> {out}"
    )
    if previous is not None and previous == manifest.to_json():
        print("fixtures unchanged")
    return EXIT_OK


def cmd_ask(opts: dict[str, Any]) -> int:
    if not opts["question"]:
        raise UsageError("ask needs a question")
    setting = opts["setting"] or "small"
    if setting not in SETTINGS:
        raise UsageError(f"unknown setting {setting!r}; valid: {', '.join(SETTINGS)}")
    method = opts["method"] or "agent"
    if method not in bench.METHODS:
        raise UsageError(f"unknown method {method!r}; valid: {', '.join(bench.METHODS)}")
    fixtures = Path(opts["fixtures"])
    manifest = _load_manifest(fixtures)
    catalog = manifest.load_catalog(setting)
    model = build_model(_model_config(opts, fixtures))
    if method == "agent":
        limits = Limits(int(opts["max_turns"]), int(opts["repeat_threshold"]))
        outcome = solve_agent(catalog, opts["question"], model, limits)
    else:
        outcome = solve_direct(catalog, opts["question"], model)

    for i, msg in enumerate(outcome.transcript):
        body = msg.content
        if msg.role == "system" and len(body) > 600:
            body = body[:600] + f"\n... [{len(msg.content) - 600} more characters]"
        print(f"--- [{i}] {msg.role}\n{body}")
    print("=" * 60)
    print(f"termination: {outcome.termination} after {outcome.turns} turn(s)")
    if outcome.error:
        print(f"error: {outcome.error}")
    if outcome.final_sql is not None:
        print(f"database: {outcome.target_db}\nSQL: {outcome.final_sql}")
        try:
            print(render_query_result(catalog.execute_sql(outcome.target_db, outcome.final_sql)))
        except CatalogError as exc:
            print(f"query failed: {exc}")
    u = outcome.usage_total
    print(f"tokens: input={u.input_tokens} output={u.output_tokens} ({u.source}); calls={len(outcome.call_usages)}")
    return EXIT_OK if outcome.termination != "model_error" else EXIT_RUNTIME


def _default_prices() -> Path:
    return Path(str(resources.files("datalake_agent") / "data" / "prices.example.json"))


def _write_report(records: list[bench.RunRecord], opts: dict[str, Any], out: Path | None, fixtures: Path | None) -> None:
    sheet = bench.PriceSheet.load(opts["prices"] or _default_prices())
    table_counts = None
    if fixtures is not None and (fixtures / "manifest.json").exists():
        table_counts = {s.name: s.table_count for s in FixtureManifest.load(fixtures).settings()}
    rep = bench.report(records, sheet, opts["price_model"], table_counts=table_counts)
    text = rep.to_text()
    print(text, end="")
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.md").write_text(text, encoding="utf-8")
        (out / "report.json").write_text(rep.to_json(), encoding="utf-8")


def cmd_bench(opts: dict[str, Any]) -> int:
    fixtures = Path(opts["fixtures"])
    manifest = _load_manifest(fixtures)
    tasks = load_tasks(opts["tasks"] or fixtures / "tasks.jsonl")
    settings = opts["setting"] or list(SETTINGS)
    methods = opts["method"] or list(bench.METHODS)
    if isinstance(settings, str):
        settings = [settings]
    if isinstance(methods, str):
        methods = [methods]
    out = Path(opts["out"] or "runs")
    config = _model_config(opts, fixtures)
    limits = Limits(int(opts["max_turns"]), int(opts["repeat_threshold"]))
    records = bench.run_benchmark(
        manifest, tasks, settings, methods, lambda: build_model(config), out,
        limits=limits, parallelism=int(opts["parallelism"]),
    )
    print(f"{len(records)} records in {out / 'records.jsonl'}")
    if opts["prices"]:
        _write_report(records, opts, out, fixtures)
    return EXIT_OK


def cmd_report(opts: dict[str, Any]) -> int:
    path = Path(opts["records"] or "runs")
    if path.is_dir():
        path = path / "records.jsonl"
    if not path.exists():
        raise FileNotFoundError(f"no records file at {path}")
    records = bench.load_records(path)
    if not records:
        raise ValueError(f"{path} holds no records")
    fixtures = Path(opts["fixtures"]) if opts["fixtures"] else None
    _write_report(records, opts, Path(opts["out"]) if opts["out"] else None, fixtures)
    return EXIT_OK


COMMANDS = {"fixtures": cmd_fixtures, "ask": cmd_ask, "bench": cmd_bench, "report": cmd_report}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        opts = _merge(args)
        return COMMANDS[args.command](opts)
    except UsageError as exc:
        print(f"datalake-agent: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError, KeyError, CatalogError, CatalogLoadError, LLMError, TaskGenerationError) as exc:
        print(f"datalake-agent: {args.command} failed: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())

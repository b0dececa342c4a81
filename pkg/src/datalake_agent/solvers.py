"""The Datalake Agent loop and the Direct Solver baseline."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from . import protocol
from .catalog import Catalog, CatalogError, DatabaseKind
from .llm import ChatMessage, ChatModel, LLMError, TokenUsage
from .protocol import (
    ACQUISITION_COMMANDS,
    DBQueryFinalSQL,
    GetColumns,
    GetDBDescription,
    GetTables,
    ProtocolError,
)

log = logging.getLogger(__name__)

__all__ = [
    "AgentLoopState",
    "Limits",
    "PromptSet",
    "SolverOutcome",
    "build_agent_system_prompt",
    "build_direct_system_prompt",
    "serialize_catalog",
    "solve_agent",
    "solve_direct",
]

TERMINATIONS = (
    "answered",
    "forced_answered",
    "forced_no_sql",
    "max_turns",
    "protocol_failure",
    "model_error",
)


@dataclass(frozen=True)
class Limits:
    max_turns: int = 25
    repeat_threshold: int = 10


@dataclass(frozen=True)
class PromptSet:
    """Prompt templates, loaded from a directory of ``.txt`` files."""

    system: str
    acquisition: str
    final: str
    metadata: str
    force_final: str
    question: str

    @classmethod
    def load(cls, directory: str | Path | None = None) -> PromptSet:
        if directory is None:
            root = resources.files("datalake_agent") / "prompts"
            read = lambda name: (root / f"{name}.txt").read_text(encoding="utf-8")  # noqa: E731
        else:
            d = Path(directory)
            read = lambda name: (d / f"{name}.txt").read_text(encoding="utf-8")  # noqa: E731
        return cls(**{name: read(name) for name in cls.__dataclass_fields__})


@dataclass
class AgentLoopState:
    transcript: list[ChatMessage]
    fingerprint_counts: dict[str, int] = field(default_factory=dict)
    turn_index: int = 0
    total_repeats: int = 0
    forced: bool = False


@dataclass
class SolverOutcome:
    final_sql: str | None
    target_db: str | None
    termination: str
    turns: int
    usage_total: TokenUsage
    call_usages: list[TokenUsage] = field(default_factory=list)
    transcript: list[ChatMessage] = field(default_factory=list)
    error: str | None = None

    def __post_init__(self) -> None:
        if self.termination not in TERMINATIONS:
            raise ValueError(f"unknown termination {self.termination!r}")
        answered = self.termination in ("answered", "forced_answered")
        if answered != (self.final_sql is not None):
            raise ValueError("final_sql must be present exactly for answered terminations")


# --------------------------------------------------------------------------
# Prompts
# --------------------------------------------------------------------------


def _fill(template: str, **values: str) -> str:
    for key, value in values.items():
        template = template.replace("{{" + key + "}}", value)
    return template


def build_agent_system_prompt(prompts: PromptSet | None = None) -> str:
    prompts = prompts or PromptSet.load()
    return _fill(
        prompts.system,
        ACQUISITION=_fill(prompts.acquisition, GRAMMAR=protocol.grammar_doc(ACQUISITION_COMMANDS)),
        FINAL=_fill(prompts.final, GRAMMAR=protocol.grammar_doc(["DBQueryFinalSQL"])),
        METADATA="",
    )


def build_direct_system_prompt(serialized_catalog: str, prompts: PromptSet | None = None) -> str:
    prompts = prompts or PromptSet.load()
    return _fill(
        prompts.system,
        ACQUISITION="",
        FINAL=_fill(prompts.final, GRAMMAR=protocol.grammar_doc(["DBQueryFinalSQL"])),
        METADATA=_fill(prompts.metadata, CATALOG=serialized_catalog),
    )


def serialize_catalog(catalog: Catalog) -> str:
    """Full metadata text for the direct prompt, built from the tool renderers."""
    descriptors = catalog.get_db_descriptions()
    parts = [protocol.render_tool_result(descriptors)]
    for d in descriptors:
        marker = " (schema only)" if d.kind is DatabaseKind.SCHEMA_ONLY else ""
        parts.append(f"\n## Database {d.id}{marker}")
        for t in catalog.get_tables(d.id):
            parts.append(f"\n### Table {protocol.render_tool_result([t])}")
            parts.append(protocol.render_tool_result(catalog.get_columns(d.id, t.name)))
    return "\n".join(parts)


# --------------------------------------------------------------------------
# Solvers
# --------------------------------------------------------------------------


def execute_command(catalog: Catalog, cmd: protocol.AgentCommand) -> Any:
    """Run an acquisition command; catalog errors are returned, not raised."""
    try:
        if isinstance(cmd, GetDBDescription):
            return catalog.get_db_descriptions()
        if isinstance(cmd, GetTables):
            return catalog.get_tables(cmd.database)
        if isinstance(cmd, GetColumns):
            return catalog.get_columns(cmd.database, cmd.table)
    except CatalogError as exc:
        return exc
    raise TypeError(f"not an acquisition command: {cmd!r}")


def _sum_usage(usages: list[TokenUsage]) -> TokenUsage:
    total = TokenUsage(0, 0, usages[0].source) if usages else TokenUsage()
    for u in usages:
        total = total + u
    return total


def solve_agent(
    catalog: Catalog,
    question: str,
    model: ChatModel,
    limits: Limits = Limits(),
    *,
    prompts: PromptSet | None = None,
    task_id: str | None = None,
) -> SolverOutcome:
    """Answer ``question`` by letting the model request metadata step by step.

    Every turn whose command was already issued earlier in the task counts
    as a repeat. When the repeat count reaches ``limits.repeat_threshold``
    the model is told to answer now; its next reply either carries the
    final SQL (``forced_answered``) or ends the run (``forced_no_sql``).
    Protocol errors use up a turn but are not repeats.
    """
    if not question.strip():
        raise ValueError("question must be nonempty")
    prompts = prompts or PromptSet.load()
    state = AgentLoopState(
        transcript=[
            ChatMessage("system", build_agent_system_prompt(prompts)),
            ChatMessage("user", _fill(prompts.question, QUESTION=question.strip()).strip()),
        ]
    )
    usages: list[TokenUsage] = []
    key = f"agent:{task_id}" if task_id else "agent"

    def finish(termination: str, cmd: DBQueryFinalSQL | None = None, error: str | None = None) -> SolverOutcome:
        return SolverOutcome(
            final_sql=cmd.sql if cmd else None,
            target_db=cmd.database if cmd else None,
            termination=termination,
            turns=state.turn_index,
            usage_total=_sum_usage(usages),
            call_usages=usages,
            transcript=state.transcript,
            error=error,
        )

    while state.turn_index < limits.max_turns:
        try:
            reply, usage = model.chat(state.transcript, key=key)
        except LLMError as exc:
            log.warning("model call failed: %s", exc)
            return finish("model_error", error=str(exc))
        usages.append(usage)
        state.turn_index += 1
        state.transcript.append(reply)

        try:
            cmd = protocol.parse_model_turn(reply.content)
        except ProtocolError as err:
            if state.forced:
                return finish("forced_no_sql", error=err.detail)
            state.transcript.append(ChatMessage("user", err.feedback()))
            continue

        if isinstance(cmd, DBQueryFinalSQL):
            return finish("forced_answered" if state.forced else "answered", cmd)
        if state.forced:
            return finish("forced_no_sql")

        fp = protocol.fingerprint(cmd)
        if fp in state.fingerprint_counts:
            state.total_repeats += 1
        state.fingerprint_counts[fp] = state.fingerprint_counts.get(fp, 0) + 1
        result = execute_command(catalog, cmd)
        state.transcript.append(ChatMessage("user", protocol.render_tool_result(result)))

        if state.total_repeats >= limits.repeat_threshold:
            state.forced = True
            state.transcript.append(ChatMessage("user", prompts.force_final.strip()))

    return finish("max_turns")


def solve_direct(
    catalog: Catalog,
    question: str,
    model: ChatModel,
    *,
    prompts: PromptSet | None = None,
    task_id: str | None = None,
    serialized_catalog: str | None = None,
) -> SolverOutcome:
    """One call with every database's metadata embedded in the system prompt.

    ``serialized_catalog`` may be passed to reuse a precomputed rendering.
    """
    if not question.strip():
        raise ValueError("question must be nonempty")
    prompts = prompts or PromptSet.load()
    if serialized_catalog is None:
        serialized_catalog = serialize_catalog(catalog)
    transcript = [
        ChatMessage("system", build_direct_system_prompt(serialized_catalog, prompts)),
        ChatMessage("user", _fill(prompts.question, QUESTION=question.strip()).strip()),
    ]
    key = f"direct:{task_id}" if task_id else "direct"
    try:
        reply, usage = model.chat(transcript, key=key)
    except LLMError as exc:
        log.warning("model call failed: %s", exc)
        return SolverOutcome(None, None, "model_error", 0, TokenUsage(), [], transcript, str(exc))
    transcript.append(reply)
    error = None
    try:
        cmd = protocol.parse_model_turn(reply.content)
    except ProtocolError as err:
        cmd, error = None, err.detail
    if not isinstance(cmd, DBQueryFinalSQL):
        error = error or "reply is not a DBQueryFinalSQL command"
        return SolverOutcome(None, None, "protocol_failure", 1, usage, [usage], transcript, error)
    return SolverOutcome(cmd.sql, cmd.database, "answered", 1, usage, [usage], transcript)

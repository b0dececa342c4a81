"""Command grammar spoken between the model and the agent.

A model turn carries exactly one action block::

    ```
    ACTION: GetColumns
    ARG: database=f1
    ARG: table=races
    ```

Free-form reasoning before or after the block is ignored. The fence is
optional; without one the block ends at the first blank line. Inside a
fence an ``ARG`` value may span several lines (useful for SQL), running up
to the next ``ARG`` line or the closing fence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Union

from .catalog import (
    CatalogError,
    ColumnDescriptor,
    DatabaseDescriptor,
    QueryResult,
    TableDescriptor,
)

__all__ = [
    "AgentCommand",
    "DBQueryFinalSQL",
    "GetColumns",
    "GetDBDescription",
    "GetTables",
    "ProtocolError",
    "fingerprint",
    "grammar_doc",
    "parse_model_turn",
    "render_command",
    "render_tool_result",
]


@dataclass(frozen=True)
class GetDBDescription:
    pass


@dataclass(frozen=True)
class GetTables:
    database: str


@dataclass(frozen=True)
class GetColumns:
    database: str
    table: str


@dataclass(frozen=True)
class DBQueryFinalSQL:
    database: str
    sql: str


AgentCommand = Union[GetDBDescription, GetTables, GetColumns, DBQueryFinalSQL]

# action name -> (class, ordered argument keys)
COMMANDS: dict[str, tuple[type, tuple[str, ...]]] = {
    "GetDBDescription": (GetDBDescription, ()),
    "GetTables": (GetTables, ("database",)),
    "GetColumns": (GetColumns, ("database", "table")),
    "DBQueryFinalSQL": (DBQueryFinalSQL, ("database", "sql")),
}
_BY_LOWER = {name.lower(): name for name in COMMANDS}
_NAME_OF = {cls: name for name, (cls, _) in COMMANDS.items()}

ACQUISITION_COMMANDS = ("GetDBDescription", "GetTables", "GetColumns")


class ProtocolError(Exception):
    """A model turn that does not contain exactly one well-formed command.

    ``detail`` is fed back to the model, so it says what to fix.
    """

    KINDS = ("no_command", "multiple_commands", "unknown_action", "malformed_arguments")

    def __init__(self, kind: str, detail: str, raw_turn: str = "") -> None:
        if kind not in self.KINDS:
            raise ValueError(f"unknown protocol error kind {kind!r}")
        if not detail:
            raise ValueError("protocol error detail must be nonempty")
        self.kind = kind
        self.detail = detail
        self.raw_turn = raw_turn
        super().__init__(f"{kind}: {detail}")

    def feedback(self) -> str:
        return f"Protocol error ({self.kind}): {self.detail}"


_ACTION_RE = re.compile(r"^\s*ACTION\s*:\s*(.*?)\s*$", re.IGNORECASE)
_ARG_RE = re.compile(r"^\s*ARG\s*:\s*([^=]*?)\s*=(.*)$", re.IGNORECASE)
_ARG_BARE_RE = re.compile(r"^\s*ARG\s*:", re.IGNORECASE)
_FENCE_RE = re.compile(r"^\s*```")


def _fence_state(lines: list[str]) -> list[bool]:
    """For each line, whether it sits inside a ``` fence (fence lines excluded)."""
    inside = False
    state = []
    for line in lines:
        if _FENCE_RE.match(line):
            state.append(False)
            inside = not inside
        else:
            state.append(inside)
    return state


def parse_model_turn(text: str) -> AgentCommand:
    """Extract the single command in a model turn or raise :class:`ProtocolError`."""
    lines = text.splitlines()
    fenced = _fence_state(lines)
    starts = [i for i, line in enumerate(lines) if _ACTION_RE.match(line)]
    if not starts:
        raise ProtocolError(
            "no_command",
            "No action block found. Reply with exactly one block: a line 'ACTION: <name>' "
            "followed by one 'ARG: <key>=<value>' line per argument.",
            text,
        )
    if len(starts) > 1:
        raise ProtocolError(
            "multiple_commands",
            f"Found {len(starts)} ACTION lines; send exactly one command per reply.",
            text,
        )

    start = starts[0]
    raw_name = _ACTION_RE.match(lines[start]).group(1)  # type: ignore[union-attr]
    name = _BY_LOWER.get(raw_name.lower())
    if name is None:
        raise ProtocolError(
            "unknown_action",
            f"Unknown action '{raw_name}'. Valid actions: {', '.join(COMMANDS)}.",
            text,
        )
    cls, keys = COMMANDS[name]
    in_fence = fenced[start]

    args: dict[str, str] = {}
    current: str | None = None
    for i in range(start + 1, len(lines)):
        line = lines[i]
        if _FENCE_RE.match(line):
            break
        if not in_fence and not line.strip():
            break
        m = _ARG_RE.match(line)
        if m:
            key = m.group(1).lower()
            if not key:
                raise ProtocolError("malformed_arguments", f"ARG line without a key: {line.strip()!r}", text)
            if key in args:
                raise ProtocolError("malformed_arguments", f"Argument '{key}' given twice.", text)
            args[key] = m.group(2)
            current = key
        elif _ARG_BARE_RE.match(line):
            raise ProtocolError(
                "malformed_arguments",
                f"ARG line must look like 'ARG: <key>=<value>', got {line.strip()!r}.",
                text,
            )
        elif in_fence and current is not None:
            args[current] += "\n" + line
        else:
            # unfenced text right after the block ends it
            break

    args = {k: v.strip() for k, v in args.items()}
    expected = ", ".join(keys) if keys else "none"
    missing = [k for k in keys if k not in args]
    if missing:
        raise ProtocolError(
            "malformed_arguments",
            f"{name} is missing argument(s): {', '.join(missing)} (expected: {expected}).",
            text,
        )
    extra = sorted(set(args) - set(keys))
    if extra:
        raise ProtocolError(
            "malformed_arguments",
            f"{name} got unexpected argument(s): {', '.join(extra)} (expected: {expected}).",
            text,
        )
    empty = [k for k in keys if not args[k]]
    if empty:
        raise ProtocolError(
            "malformed_arguments",
            f"{name} argument(s) must be nonempty: {', '.join(empty)}.",
            text,
        )
    return cls(**{k: args[k] for k in keys})


def render_command(cmd: AgentCommand) -> str:
    """Serialize a command as a fenced action block (inverse of parsing)."""
    name = _NAME_OF[type(cmd)]
    _, keys = COMMANDS[name]
    lines = ["```", f"ACTION: {name}"]
    lines += [f"ARG: {k}={getattr(cmd, k)}" for k in keys]
    lines.append("```")
    return "\n".join(lines)


def fingerprint(cmd: AgentCommand) -> str:
    """Canonical key for repeat detection. Final answers are never fingerprinted."""
    if isinstance(cmd, DBQueryFinalSQL):
        raise ValueError("DBQueryFinalSQL is terminal and has no fingerprint")
    name = _NAME_OF[type(cmd)]
    _, keys = COMMANDS[name]
    parts = [name] + [" ".join(str(getattr(cmd, k)).split()).lower() for k in keys]
    return "|".join(parts)


# --------------------------------------------------------------------------
# Grammar documentation embedded in prompts
# --------------------------------------------------------------------------

_COMMAND_DOCS = {
    "GetDBDescription": (
        "List every available database with its id and a short summary.",
        [],
    ),
    "GetTables": (
        "List the tables of one database.",
        [("database", "<database id>")],
    ),
    "GetColumns": (
        "List the columns of one table with their types, key flags and references.",
        [("database", "<database id>"), ("table", "<table name>")],
    ),
    "DBQueryFinalSQL": (
        "Submit your final SQLite query. This ends the conversation; it is executed once.",
        [("database", "<database id>"), ("sql", "<one SELECT statement>")],
    ),
}


def grammar_doc(actions: tuple[str, ...] | list[str]) -> str:
    """Human-readable reference for the given actions, in prompt-ready form."""
    out = []
    for name in actions:
        summary, params = _COMMAND_DOCS[name]
        out.append(f"{name}: {summary}")
        out.append("```")
        out.append(f"ACTION: {name}")
        out += [f"ARG: {key}={placeholder}" for key, placeholder in params]
        out.append("```")
        out.append("")
    return "\n".join(out).rstrip() + "\n"


# --------------------------------------------------------------------------
# Tool result rendering
# --------------------------------------------------------------------------


def _render_columns(cols: list[ColumnDescriptor]) -> str:
    width = max(len(c.name) for c in cols) + 1
    lines = []
    for c in cols:
        line = f"{(c.name + ':').ljust(width)} {c.data_type or 'ANY'}"
        if c.is_primary_key:
            line += " [PK]"
        if c.foreign_key_ref:
            line += f" [FK→{c.foreign_key_ref[0]}.{c.foreign_key_ref[1]}]"
        lines.append(line)
    return "\n".join(lines)


def _render_tables(tables: list[TableDescriptor]) -> str:
    return "\n".join(
        t.name if t.row_count is None else f"{t.name} ({t.row_count} rows)" for t in tables
    )


def _scalar(v: Any) -> str:
    if v is None:
        return "NULL"
    if isinstance(v, float):
        return format(v, ".9g")
    if isinstance(v, bytes):
        return "x'" + v.hex() + "'"
    return str(v)


def render_query_result(result: QueryResult, max_rows: int = 50) -> str:
    lines = [" | ".join(result.columns)]
    for row in result.rows[:max_rows]:
        lines.append(" | ".join(_scalar(v) for v in row))
    if len(result.rows) > max_rows:
        lines.append(f"... ({len(result.rows) - max_rows} more rows)")
    lines.append(f"({len(result.rows)} rows)")
    return "\n".join(lines)


def render_tool_result(result: Any) -> str:
    """Compact, deterministic text for a catalog result or error."""
    if isinstance(result, (CatalogError, ProtocolError)):
        return result.feedback() if isinstance(result, ProtocolError) else str(result)
    if isinstance(result, QueryResult):
        return render_query_result(result)
    if isinstance(result, list):
        if not result:
            return "(none)"
        head = result[0]
        if isinstance(head, DatabaseDescriptor):
            return "\n".join(f"{d.id} — {d.description}" for d in result)
        if isinstance(head, TableDescriptor):
            return _render_tables(result)
        if isinstance(head, ColumnDescriptor):
            return _render_columns(result)
    raise TypeError(f"cannot render {type(result).__name__}")

"""Registry of attached databases and the three metadata granularities.

A catalog holds materialized SQLite databases (introspected at load time)
and schema-only databases (described by a JSON schema document and never
queryable). Everything the agent learns about the data lake goes through
:meth:`Catalog.get_db_descriptions`, :meth:`Catalog.get_tables` and
:meth:`Catalog.get_columns`; the final answer runs via
:meth:`Catalog.execute_sql`.

Error messages raised here are shown to the model verbatim, so they name
the valid alternatives.
"""

from __future__ import annotations

import json
import re
import sqlite3
import threading
from dataclasses import asdict, dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Iterable

__all__ = [
    "Catalog",
    "CatalogError",
    "CatalogLoadError",
    "ColumnDescriptor",
    "DatabaseDescriptor",
    "DatabaseKind",
    "NoDataAttachedError",
    "QueryResult",
    "ReadOnlyViolationError",
    "SQLExecutionError",
    "TableDescriptor",
    "UnknownDatabaseError",
    "UnknownTableError",
    "load_catalog",
]


class DatabaseKind(str, Enum):
    MATERIALIZED = "materialized"
    SCHEMA_ONLY = "schema_only"


@dataclass(frozen=True)
class DatabaseDescriptor:
    id: str
    name: str
    description: str
    domain_tag: str
    kind: DatabaseKind

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["kind"] = self.kind.value
        return d


@dataclass(frozen=True)
class TableDescriptor:
    db_id: str
    name: str
    row_count: int | None = None


@dataclass(frozen=True)
class ColumnDescriptor:
    db_id: str
    table: str
    name: str
    data_type: str
    is_primary_key: bool = False
    foreign_key_ref: tuple[str, str] | None = None


@dataclass(frozen=True)
class QueryResult:
    columns: list[str]
    rows: list[list[Any]]

    def __post_init__(self) -> None:
        width = len(self.columns)
        for row in self.rows:
            if len(row) != width:
                raise ValueError(f"row has {len(row)} values, expected {width}")


class CatalogError(Exception):
    """Base class for model-facing catalog errors."""


class UnknownDatabaseError(CatalogError):
    pass


class UnknownTableError(CatalogError):
    pass


class NoDataAttachedError(CatalogError):
    pass


class ReadOnlyViolationError(CatalogError):
    pass


class SQLExecutionError(CatalogError):
    pass


class CatalogLoadError(Exception):
    """A source listed in a catalog config could not be loaded."""

    def __init__(self, path: str | Path, reason: str) -> None:
        self.path = str(path)
        self.reason = reason
        super().__init__(f"{self.path}: {reason}")


@dataclass
class _Database:
    descriptor: DatabaseDescriptor
    tables: dict[str, TableDescriptor]  # keyed by lowercased name
    columns: dict[str, list[ColumnDescriptor]]  # keyed by lowercased table name
    path: Path | None = None
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)


# --------------------------------------------------------------------------
# SQL safety
# --------------------------------------------------------------------------

_ALLOWED_LEADING = ("select", "with", "values")

# sqlite3 authorizer action codes that only read.
_READ_ACTIONS = {
    sqlite3.SQLITE_SELECT,
    sqlite3.SQLITE_READ,
    sqlite3.SQLITE_FUNCTION,
    getattr(sqlite3, "SQLITE_RECURSIVE", 33),
}


def split_statements(sql: str) -> list[str]:
    """Split ``sql`` on top-level semicolons, honouring quotes and comments.

    Empty statements (e.g. a trailing ``;``) are dropped.
    """
    statements: list[str] = []
    buf: list[str] = []
    i, n = 0, len(sql)
    while i < n:
        ch = sql[i]
        if ch in ("'", '"', "`", "["):
            close = "]" if ch == "[" else ch
            j = i + 1
            while j < n:
                if sql[j] == close:
                    # doubled quote is an escape, brackets have none
                    if close != "]" and j + 1 < n and sql[j + 1] == close:
                        j += 2
                        continue
                    break
                j += 1
            buf.append(sql[i : j + 1])
            i = j + 1
        elif sql.startswith("--", i):
            j = sql.find("\n", i)
            j = n if j == -1 else j
            buf.append(" ")
            i = j
        elif sql.startswith("/*", i):
            j = sql.find("*/", i + 2)
            j = n if j == -1 else j + 2
            buf.append(" ")
            i = j
        elif ch == ";":
            statements.append("".join(buf))
            buf = []
            i += 1
        else:
            buf.append(ch)
            i += 1
    statements.append("".join(buf))
    return [s.strip() for s in statements if s.strip()]


def check_read_only(sql: str) -> str:
    """Return the single read-only statement in ``sql`` or raise."""
    statements = split_statements(sql)
    if not statements:
        raise ReadOnlyViolationError("Rejected: empty SQL. Send one SELECT statement.")
    if len(statements) > 1:
        raise ReadOnlyViolationError(
            f"Rejected: {len(statements)} statements found; send exactly one SELECT statement."
        )
    stmt = statements[0]
    first = re.match(r"\s*\(*\s*([A-Za-z]+)", stmt)
    keyword = first.group(1).lower() if first else ""
    if keyword not in _ALLOWED_LEADING:
        raise ReadOnlyViolationError(
            f"Rejected: only read-only SELECT/WITH queries are allowed, got {keyword.upper() or 'nothing'}."
        )
    return stmt


def _deny_writes(action: int, *_args: Any) -> int:
    if action in _READ_ACTIONS:
        return sqlite3.SQLITE_OK
    return sqlite3.SQLITE_DENY


# --------------------------------------------------------------------------
# Introspection
# --------------------------------------------------------------------------


def _connect_ro(path: Path) -> sqlite3.Connection:
    return sqlite3.connect(f"file:{path}?mode=ro", uri=True, check_same_thread=False)


def _introspect_sqlite(descriptor: DatabaseDescriptor, path: Path) -> _Database:
    if not path.is_file():
        raise CatalogLoadError(path, "database file not found")
    try:
        conn = _connect_ro(path)
    except sqlite3.Error as exc:
        raise CatalogLoadError(path, f"cannot open database: {exc}") from exc
    try:
        names = [
            r[0]
            for r in conn.execute(
                "SELECT name FROM sqlite_master WHERE type='table' AND name NOT LIKE 'sqlite_%'"
            )
        ]
        tables: dict[str, TableDescriptor] = {}
        columns: dict[str, list[ColumnDescriptor]] = {}
        for name in names:
            quoted = '"' + name.replace('"', '""') + '"'
            (count,) = conn.execute(f"SELECT COUNT(*) FROM {quoted}").fetchone()
            fks = {
                row[3]: (row[2], row[4])
                for row in conn.execute(f"PRAGMA foreign_key_list({quoted})")
            }
            cols = [
                ColumnDescriptor(
                    db_id=descriptor.id,
                    table=name,
                    name=row[1],
                    data_type=row[2] or "",
                    is_primary_key=bool(row[5]),
                    foreign_key_ref=fks.get(row[1]),
                )
                for row in conn.execute(f"PRAGMA table_info({quoted})")
            ]
            tables[name.lower()] = TableDescriptor(descriptor.id, name, int(count))
            columns[name.lower()] = cols
    except sqlite3.DatabaseError as exc:
        raise CatalogLoadError(path, f"cannot introspect database: {exc}") from exc
    finally:
        conn.close()
    return _Database(descriptor, tables, columns, path=path)


def load_schema_document(path: str | Path) -> dict[str, Any]:
    """Read and validate a schema-only database document.

    Layout::

        {"id": ..., "name": ..., "description": ..., "domain_tag": ...,
         "tables": [{"name": ..., "columns": [
             {"name": ..., "type": ..., "pk": bool, "fk": [table, column] | null}]}]}
    """
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise CatalogLoadError(path, f"unreadable schema document: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CatalogLoadError(path, f"schema document is not valid JSON: {exc}") from exc

    def fail(reason: str) -> CatalogLoadError:
        return CatalogLoadError(path, f"invalid schema document: {reason}")

    if not isinstance(doc, dict) or not isinstance(doc.get("tables"), list):
        raise fail("expected an object with a 'tables' list")
    if not doc["tables"]:
        raise fail("no tables defined")
    seen: set[str] = set()
    for t in doc["tables"]:
        if not isinstance(t, dict) or not isinstance(t.get("name"), str) or not t["name"]:
            raise fail("every table needs a nonempty 'name'")
        if t["name"].lower() in seen:
            raise fail(f"duplicate table {t['name']!r}")
        seen.add(t["name"].lower())
        cols = t.get("columns")
        if not isinstance(cols, list) or not cols:
            raise fail(f"table {t['name']!r} has no columns")
        col_seen: set[str] = set()
        for c in cols:
            if not isinstance(c, dict) or not c.get("name") or not isinstance(c.get("type"), str):
                raise fail(f"table {t['name']!r}: every column needs 'name' and 'type'")
            if c["name"].lower() in col_seen:
                raise fail(f"table {t['name']!r}: duplicate column {c['name']!r}")
            col_seen.add(c["name"].lower())
    for t in doc["tables"]:
        for c in t["columns"]:
            fk = c.get("fk")
            if fk is not None:
                if not (isinstance(fk, list) and len(fk) == 2):
                    raise fail(f"{t['name']}.{c['name']}: fk must be [table, column]")
                if fk[0].lower() not in seen:
                    raise fail(f"{t['name']}.{c['name']}: fk references unknown table {fk[0]!r}")
    return doc


def _schema_only_database(descriptor: DatabaseDescriptor, doc: dict[str, Any]) -> _Database:
    tables: dict[str, TableDescriptor] = {}
    columns: dict[str, list[ColumnDescriptor]] = {}
    for t in doc["tables"]:
        name = t["name"]
        tables[name.lower()] = TableDescriptor(descriptor.id, name, None)
        columns[name.lower()] = [
            ColumnDescriptor(
                db_id=descriptor.id,
                table=name,
                name=c["name"],
                data_type=c["type"],
                is_primary_key=bool(c.get("pk", False)),
                foreign_key_ref=tuple(c["fk"]) if c.get("fk") else None,
            )
            for c in t["columns"]
        ]
    return _Database(descriptor, tables, columns)


# --------------------------------------------------------------------------
# Catalog
# --------------------------------------------------------------------------


class Catalog:
    """Immutable view over a set of databases.

    Lookups of database ids and table names are case-insensitive; the
    returned descriptors keep the original spelling.
    """

    def __init__(self, databases: Iterable[_Database] = ()) -> None:
        self._dbs: dict[str, _Database] = {}
        for db in databases:
            key = db.descriptor.id.lower()
            if key in self._dbs:
                raise ValueError(f"duplicate database id {db.descriptor.id!r}")
            self._dbs[key] = db

    def __len__(self) -> int:
        return len(self._dbs)

    def __contains__(self, db_id: object) -> bool:
        return isinstance(db_id, str) and db_id.strip().lower() in self._dbs

    @property
    def table_count(self) -> int:
        return sum(len(db.tables) for db in self._dbs.values())

    def db_ids(self) -> list[str]:
        return sorted(db.descriptor.id for db in self._dbs.values())

    def _db(self, db_id: str) -> _Database:
        db = self._dbs.get(str(db_id).strip().lower())
        if db is None:
            valid = ", ".join(self.db_ids()) or "(none)"
            raise UnknownDatabaseError(
                f"Unknown database '{db_id}'. Valid database ids: {valid}."
            )
        return db

    def _table_key(self, db: _Database, table: str) -> str:
        key = str(table).strip().lower()
        if key not in db.tables:
            valid = ", ".join(sorted(t.name for t in db.tables.values()))
            raise UnknownTableError(
                f"Unknown table '{table}' in database '{db.descriptor.id}'. "
                f"Valid tables: {valid}."
            )
        return key

    def descriptor(self, db_id: str) -> DatabaseDescriptor:
        return self._db(db_id).descriptor

    def get_db_descriptions(self) -> list[DatabaseDescriptor]:
        return sorted((db.descriptor for db in self._dbs.values()), key=lambda d: d.id)

    def get_tables(self, db_id: str) -> list[TableDescriptor]:
        db = self._db(db_id)
        return sorted(db.tables.values(), key=lambda t: t.name)

    def get_columns(self, db_id: str, table: str) -> list[ColumnDescriptor]:
        db = self._db(db_id)
        return list(db.columns[self._table_key(db, table)])

    def execute_sql(self, db_id: str, sql: str) -> QueryResult:
        """Run one read-only statement against a materialized database.

        Raises :class:`NoDataAttachedError` for schema-only databases,
        :class:`ReadOnlyViolationError` for anything but a single SELECT/WITH
        statement and :class:`SQLExecutionError` carrying the engine message.
        """
        db = self._db(db_id)
        if db.descriptor.kind is DatabaseKind.SCHEMA_ONLY:
            raise NoDataAttachedError(
                f"Database '{db.descriptor.id}' is schema-only: no data attached, queries cannot run."
            )
        stmt = check_read_only(sql)
        assert db.path is not None
        with db.lock:
            conn = _connect_ro(db.path)
            try:
                conn.set_authorizer(_deny_writes)
                cur = conn.execute(stmt)
                rows = [list(r) for r in cur.fetchall()]
                columns = [d[0] for d in cur.description or ()]
            except sqlite3.DatabaseError as exc:
                if "not authorized" in str(exc):
                    raise ReadOnlyViolationError(
                        f"Rejected: statement attempts a write or schema change ({exc})."
                    ) from exc
                raise SQLExecutionError(str(exc)) from exc
            except sqlite3.Warning as exc:
                raise ReadOnlyViolationError(f"Rejected: {exc}") from exc
            finally:
                conn.close()
        return QueryResult(columns, rows)

    def referenced_tables(self, db_id: str, sql: str) -> set[str]:
        """Names of tables a read-only statement reads, as seen by the engine."""
        db = self._db(db_id)
        if db.descriptor.kind is DatabaseKind.SCHEMA_ONLY:
            raise NoDataAttachedError(f"Database '{db.descriptor.id}' is schema-only.")
        stmt = check_read_only(sql)
        seen: set[str] = set()

        def watch(action: int, arg1: Any, _arg2: Any, _dbname: Any, _trigger: Any) -> int:
            if action == sqlite3.SQLITE_READ and arg1 and not arg1.startswith("sqlite_"):
                seen.add(arg1)
            return _deny_writes(action)

        assert db.path is not None
        conn = _connect_ro(db.path)
        try:
            conn.set_authorizer(watch)
            conn.execute(f"EXPLAIN {stmt}").fetchall()
        except sqlite3.DatabaseError as exc:
            raise SQLExecutionError(str(exc)) from exc
        finally:
            conn.close()
        # CTE names are reported by some engines; keep only real tables.
        return {db.tables[t.lower()].name for t in seen if t.lower() in db.tables}

    def to_dict(self) -> dict[str, Any]:
        """Serialize all metadata (no row data) in deterministic order."""
        out = []
        for desc in self.get_db_descriptions():
            db = self._db(desc.id)
            out.append(
                {
                    **desc.to_dict(),
                    "tables": [
                        {
                            "name": t.name,
                            "row_count": t.row_count,
                            "columns": [
                                {
                                    "name": c.name,
                                    "type": c.data_type,
                                    "pk": c.is_primary_key,
                                    "fk": list(c.foreign_key_ref) if c.foreign_key_ref else None,
                                }
                                for c in db.columns[t.name.lower()]
                            ],
                        }
                        for t in self.get_tables(desc.id)
                    ],
                }
            )
        return {"databases": out}

    def serialize(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


# --------------------------------------------------------------------------
# Loading
# --------------------------------------------------------------------------

_ID_RE = re.compile(r"^\S+$")


def load_catalog(config: str | Path | dict[str, Any]) -> Catalog:
    """Build a catalog from a config file path or an already-parsed config.

    Config layout (paths relative to the config file)::

        {"databases": [{"id": "f1", "kind": "materialized", "path": "databases/f1.sqlite",
                        "name": "...", "description": "...", "domain_tag": "sports"},
                       {"id": "...", "kind": "schema_only", "path": "schemas/x.json", ...}]}

    For schema-only entries, missing name/description/domain_tag fall back
    to the schema document.
    """
    if isinstance(config, dict):
        base = Path.cwd()
        cfg = config
        cfg_path: Path | str = "<config>"
    else:
        cfg_path = Path(config)
        base = cfg_path.parent
        try:
            cfg = json.loads(cfg_path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise CatalogLoadError(cfg_path, f"unreadable catalog config: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise CatalogLoadError(cfg_path, f"catalog config is not valid JSON: {exc}") from exc
    entries = cfg.get("databases") if isinstance(cfg, dict) else None
    if not isinstance(entries, list):
        raise CatalogLoadError(cfg_path, "catalog config needs a 'databases' list")

    databases: list[_Database] = []
    seen: dict[str, Path] = {}
    for entry in entries:
        if "path" not in entry:
            raise CatalogLoadError(cfg_path, f"entry {entry.get('id')!r} has no 'path'")
        path = Path(entry["path"])
        if not path.is_absolute():
            path = base / path
        db_id = entry.get("id")
        if not isinstance(db_id, str) or not _ID_RE.match(db_id):
            raise CatalogLoadError(path, f"invalid database id {db_id!r} (nonempty, no whitespace)")
        if db_id.lower() in seen:
            raise CatalogLoadError(path, f"duplicate database id {db_id!r} (also at {seen[db_id.lower()]})")
        seen[db_id.lower()] = path
        try:
            kind = DatabaseKind(entry.get("kind", "materialized"))
        except ValueError:
            raise CatalogLoadError(path, f"unknown kind {entry.get('kind')!r}") from None

        doc = load_schema_document(path) if kind is DatabaseKind.SCHEMA_ONLY else {}
        description = entry.get("description") or doc.get("description") or ""
        if not description.strip():
            raise CatalogLoadError(path, f"database {db_id!r} has an empty description")
        descriptor = DatabaseDescriptor(
            id=db_id,
            name=entry.get("name") or doc.get("name") or db_id,
            description=description.strip(),
            domain_tag=entry.get("domain_tag") or doc.get("domain_tag") or "",
            kind=kind,
        )
        if kind is DatabaseKind.SCHEMA_ONLY:
            databases.append(_schema_only_database(descriptor, doc))
        else:
            databases.append(_introspect_sqlite(descriptor, path))
    return Catalog(databases)

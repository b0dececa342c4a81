from __future__ import annotations

import json
import sqlite3
import threading

import pytest

from datalake_agent.catalog import (
    CatalogLoadError,
    DatabaseKind,
    NoDataAttachedError,
    ReadOnlyViolationError,
    SQLExecutionError,
    UnknownDatabaseError,
    UnknownTableError,
    check_read_only,
    load_catalog,
    split_statements,
)


@pytest.fixture
def tiny(tmp_path):
    """One materialized db and one schema-only db."""
    conn = sqlite3.connect(tmp_path / "shop.sqlite")
    with conn:
        conn.execute("CREATE TABLE customer (id INTEGER PRIMARY KEY, name TEXT)")
        conn.execute(
            "CREATE TABLE orders (id INTEGER PRIMARY KEY, customer_id INTEGER REFERENCES customer(id), total REAL)"
        )
        conn.executemany("INSERT INTO customer VALUES (?, ?)", [(1, "Ann"), (2, "Bob")])
        conn.executemany("INSERT INTO orders VALUES (?, ?, ?)", [(1, 1, 9.5), (2, 1, 3.0), (3, 2, 7.25)])
    conn.close()
    (tmp_path / "ghost.json").write_text(json.dumps({
        "name": "Ghost", "description": "Metadata only.", "domain_tag": "misc",
        "tables": [
            {"name": "a", "columns": [{"name": "id", "type": "INTEGER", "pk": True}]},
            {"name": "b", "columns": [{"name": "a_id", "type": "INTEGER", "fk": ["a", "id"]}]},
        ],
    }))
    cfg = {"databases": [
        {"id": "shop", "kind": "materialized", "path": "shop.sqlite", "name": "Shop",
         "description": "Small shop.", "domain_tag": "retail"},
        {"id": "ghost", "kind": "schema_only", "path": "ghost.json"},
    ]}
    (tmp_path / "catalog.json").write_text(json.dumps(cfg))
    return load_catalog(tmp_path / "catalog.json")


def test_descriptions_sorted_and_kinds(tiny):
    descs = tiny.get_db_descriptions()
    assert [d.id for d in descs] == ["ghost", "shop"]
    assert descs[0].kind is DatabaseKind.SCHEMA_ONLY
    assert descs[0].description == "Metadata only."  # falls back to the schema document
    assert tiny.table_count == 4


def test_tables_and_columns(tiny):
    tables = tiny.get_tables("shop")
    assert [(t.name, t.row_count) for t in tables] == [("customer", 2), ("orders", 3)]
    cols = tiny.get_columns("SHOP", "Orders")  # lookups ignore case
    assert [c.name for c in cols] == ["id", "customer_id", "total"]
    assert cols[0].is_primary_key
    assert cols[1].foreign_key_ref == ("customer", "id")
    assert [t.row_count for t in tiny.get_tables("ghost")] == [None, None]
    assert tiny.get_columns("ghost", "b")[0].foreign_key_ref == ("a", "id")


def test_unknown_names_list_alternatives(tiny):
    with pytest.raises(UnknownDatabaseError, match="ghost, shop"):
        tiny.get_tables("nope")
    with pytest.raises(UnknownTableError, match="customer, orders"):
        tiny.get_columns("shop", "nope")


def test_execute_and_errors(tiny):
    res = tiny.execute_sql("shop", "SELECT name, SUM(total) FROM customer JOIN orders ON orders.customer_id = customer.id GROUP BY name")
    assert sorted(map(tuple, res.rows)) == [("Ann", 12.5), ("Bob", 7.25)]
    with pytest.raises(NoDataAttachedError):
        tiny.execute_sql("ghost", "SELECT 1")
    with pytest.raises(SQLExecutionError, match="no such column"):
        tiny.execute_sql("shop", "SELECT nope FROM customer")


@pytest.mark.parametrize("sql", [
    "DELETE FROM customer",
    "DROP TABLE orders",
    "SELECT 1; DELETE FROM customer",
    "INSERT INTO customer VALUES (3, 'x')",
    "PRAGMA writable_schema = 1",
    "ATTACH DATABASE ':memory:' AS m",
    "",
])
def test_writes_rejected(tiny, sql):
    with pytest.raises(ReadOnlyViolationError):
        tiny.execute_sql("shop", sql)
    assert len(tiny.execute_sql("shop", "SELECT * FROM customer").rows) == 2


def test_split_statements_respects_quotes():
    assert split_statements("SELECT ';' ; SELECT 2;") == ["SELECT ';'", "SELECT 2"]
    assert check_read_only("  WITH x AS (SELECT 1) SELECT * FROM x ; ").startswith("WITH")


def test_concurrent_queries(tiny):
    errors = []

    def work():
        try:
            for _ in range(20):
                assert len(tiny.execute_sql("shop", "SELECT * FROM orders").rows) == 3
        except Exception as exc:  # pragma: no cover
            errors.append(exc)

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors


def test_referenced_tables(tiny):
    assert tiny.referenced_tables("shop", "SELECT COUNT(*) FROM orders") == {"orders"}
    assert tiny.referenced_tables(
        "shop", "WITH t AS (SELECT customer_id FROM orders) SELECT name FROM customer JOIN t ON t.customer_id = customer.id"
    ) == {"customer", "orders"}


def test_serialize_is_deterministic(tiny, tmp_path):
    again = load_catalog(tmp_path / "catalog.json")
    assert tiny.serialize() == again.serialize()
    assert "Ann" not in tiny.serialize()  # metadata only


class TestLoadErrors:
    def write(self, tmp_path, cfg):
        p = tmp_path / "c.json"
        p.write_text(json.dumps(cfg))
        return p

    def test_missing_file(self, tmp_path):
        p = self.write(tmp_path, {"databases": [{"id": "x", "path": "missing.sqlite", "description": "d"}]})
        with pytest.raises(CatalogLoadError, match="missing.sqlite"):
            load_catalog(p)

    def test_duplicate_id(self, tiny, tmp_path):
        p = self.write(tmp_path, {"databases": [
            {"id": "shop", "path": "shop.sqlite", "description": "d"},
            {"id": "SHOP", "path": "shop.sqlite", "description": "d"},
        ]})
        with pytest.raises(CatalogLoadError, match="duplicate"):
            load_catalog(p)

    def test_empty_description(self, tiny, tmp_path):
        p = self.write(tmp_path, {"databases": [{"id": "shop", "path": "shop.sqlite", "description": " "}]})
        with pytest.raises(CatalogLoadError, match="empty description"):
            load_catalog(p)

    def test_bad_fk(self, tmp_path):
        (tmp_path / "s.json").write_text(json.dumps({"description": "d", "tables": [
            {"name": "a", "columns": [{"name": "x", "type": "INT", "fk": ["zz", "id"]}]}]}))
        p = self.write(tmp_path, {"databases": [{"id": "s", "kind": "schema_only", "path": "s.json"}]})
        with pytest.raises(CatalogLoadError, match="unknown table 'zz'"):
            load_catalog(p)

    def test_not_json(self, tmp_path):
        p = tmp_path / "c.json"
        p.write_text("{nope")
        with pytest.raises(CatalogLoadError, match="not valid JSON"):
            load_catalog(p)

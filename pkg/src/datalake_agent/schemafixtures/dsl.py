"""Compact table notation used by the authored fixture schemas.

One table per line::

    races: race_id:INTEGER*, year:INTEGER, circuit_id:INTEGER>circuits.circuit_id

``*`` marks a primary-key column, ``>table.column`` a foreign key.
"""

from __future__ import annotations

from typing import Any


def parse_tables(block: str) -> list[dict[str, Any]]:
    tables = []
    for raw in block.strip().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, _, cols = line.partition(":")
        columns = []
        for spec in cols.split(","):
            spec = spec.strip()
            col, _, ctype = spec.partition(":")
            fk = None
            if ">" in ctype:
                ctype, target = ctype.split(">", 1)
                ref_table, ref_col = target.split(".", 1)
                fk = [ref_table, ref_col]
            pk = ctype.endswith("*")
            columns.append({"name": col.strip(), "type": ctype.rstrip("*").strip(), "pk": pk, "fk": fk})
        tables.append({"name": name.strip(), "columns": columns})
    return tables


def create_table_sql(table: dict[str, Any]) -> str:
    """CREATE TABLE statement for a parsed table definition."""
    defs = []
    pks = [c["name"] for c in table["columns"] if c["pk"]]
    for c in table["columns"]:
        d = f'"{c["name"]}" {c["type"]}'
        if c["pk"] and len(pks) == 1:
            d += " PRIMARY KEY"
        defs.append(d)
    if len(pks) > 1:
        defs.append("PRIMARY KEY (" + ", ".join(f'"{p}"' for p in pks) + ")")
    for c in table["columns"]:
        if c["fk"]:
            defs.append(f'FOREIGN KEY ("{c["name"]}") REFERENCES "{c["fk"][0]}"("{c["fk"][1]}")')
    return f'CREATE TABLE "{table["name"]}" (\n  ' + ",\n  ".join(defs) + "\n)"

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import MUTATIONS, EXPECTED_KIND, applicable, commands, mutate

from datalake_agent.catalog import ColumnDescriptor, QueryResult, TableDescriptor, UnknownTableError
from datalake_agent.protocol import (
    DBQueryFinalSQL,
    GetColumns,
    GetDBDescription,
    GetTables,
    ProtocolError,
    fingerprint,
    grammar_doc,
    parse_model_turn,
    render_command,
    render_tool_result,
)


class TestParse:
    def test_fenced_with_reasoning(self):
        turn = "I need the columns first.\n```\nACTION: GetColumns\nARG: database=f1\nARG: table=races\n```\nthanks"
        assert parse_model_turn(turn) == GetColumns("f1", "races")

    def test_unfenced_block_ends_at_blank_line(self):
        turn = "ACTION: GetTables\nARG: database=avito\n\nARG: database=other"
        assert parse_model_turn(turn) == GetTables("avito")

    def test_case_insensitive_action_and_key(self):
        assert parse_model_turn("action: getdbdescription") == GetDBDescription()
        assert parse_model_turn("ACTION: GETTABLES\narg: Database=x") == GetTables("x")

    def test_argument_order_free(self):
        turn = "```\nACTION: GetColumns\nARG: table=t\nARG: database=d\n```"
        assert parse_model_turn(turn) == GetColumns("d", "t")

    def test_multiline_sql_inside_fence(self):
        turn = "```\nACTION: DBQueryFinalSQL\nARG: database=f1\nARG: sql=SELECT COUNT(*)\nFROM races\nWHERE year = 2015\n```"
        cmd = parse_model_turn(turn)
        assert cmd == DBQueryFinalSQL("f1", "SELECT COUNT(*)\nFROM races\nWHERE year = 2015")

    def test_equals_inside_value(self):
        cmd = parse_model_turn("ACTION: DBQueryFinalSQL\nARG: database=f1\nARG: sql=SELECT 1 WHERE 'a=b' = 'a=b'")
        assert cmd.sql == "SELECT 1 WHERE 'a=b' = 'a=b'"

    @pytest.mark.parametrize("turn,kind", [
        ("", "no_command"),
        ("Let me think about this.", "no_command"),
        ("ACTION: GetTables\nARG: database=a\nACTION: GetTables\nARG: database=b", "multiple_commands"),
        ("ACTION: RunShell\nARG: cmd=ls", "unknown_action"),
        ("ACTION: GetTables", "malformed_arguments"),
        ("ACTION: GetTables\nARG: database=a\nARG: table=b", "malformed_arguments"),
        ("ACTION: GetTables\nARG: database=", "malformed_arguments"),
        ("ACTION: GetTables\nARG: database=a\nARG: database=b", "malformed_arguments"),
        ("ACTION: GetTables\nARG: database", "malformed_arguments"),
    ])
    def test_errors(self, turn, kind):
        with pytest.raises(ProtocolError) as info:
            parse_model_turn(turn)
        assert info.value.kind == kind
        assert info.value.raw_turn == turn
        assert info.value.feedback().startswith(f"Protocol error ({kind})")


@settings(max_examples=200, deadline=None)
@given(commands)
def test_round_trip(cmd):
    assert parse_model_turn(render_command(cmd)) == cmd


@settings(max_examples=200, deadline=None)
@given(commands, st.sampled_from(MUTATIONS))
def test_mutations_raise_one_error(cmd, mutation):
    if not applicable(cmd, mutation):
        return
    with pytest.raises(ProtocolError) as info:
        parse_model_turn(mutate(cmd, mutation))
    assert info.value.kind == EXPECTED_KIND[mutation]


class TestFingerprint:
    def test_normalizes_case_and_space(self):
        assert fingerprint(GetColumns("F1", " Races ")) == fingerprint(GetColumns("f1", "races"))
        assert fingerprint(GetColumns("f1", "races")) != fingerprint(GetColumns("f1", "results"))
        assert fingerprint(GetDBDescription()) == "GetDBDescription"

    def test_final_has_none(self):
        with pytest.raises(ValueError):
            fingerprint(DBQueryFinalSQL("f1", "SELECT 1"))


def test_grammar_doc_lists_requested_actions_only():
    doc = grammar_doc(["GetTables"])
    assert "ACTION: GetTables" in doc and "ARG: database=<database id>" in doc
    assert "DBQueryFinalSQL" not in doc


class TestRender:
    def test_columns(self):
        cols = [
            ColumnDescriptor("f1", "results", "result_id", "INTEGER", True, None),
            ColumnDescriptor("f1", "results", "race_id", "INTEGER", False, ("races", "race_id")),
        ]
        assert render_tool_result(cols) == "result_id: INTEGER [PK]\nrace_id:   INTEGER [FK→races.race_id]"

    def test_tables_with_and_without_counts(self):
        assert render_tool_result([TableDescriptor("f1", "races", 40), TableDescriptor("x", "y", None)]) == "races (40 rows)\ny"

    def test_empty_and_errors(self):
        assert render_tool_result([]) == "(none)"
        assert render_tool_result(UnknownTableError("Unknown table 'q'.")) == "Unknown table 'q'."

    def test_query_result(self):
        text = render_tool_result(QueryResult(["a", "b"], [[1, None], [0.1 + 0.2, "x"]]))
        assert text == "a | b\n1 | NULL\n0.3 | x\n(2 rows)"

    def test_unknown_type(self):
        with pytest.raises(TypeError):
            render_tool_result(42)

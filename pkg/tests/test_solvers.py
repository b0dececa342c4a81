from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from datalake_agent import protocol
from datalake_agent.llm import CallableChatModel, ChatMessage, LLMError, ScriptedChatModel, TokenUsage
from datalake_agent.protocol import DBQueryFinalSQL, GetColumns, GetDBDescription, GetTables, render_command
from datalake_agent.solvers import (
    Limits,
    SolverOutcome,
    build_agent_system_prompt,
    build_direct_system_prompt,
    serialize_catalog,
    solve_agent,
    solve_direct,
)

Q = "How many races were held in 2015?"
FINAL = render_command(DBQueryFinalSQL("f1", "SELECT COUNT(*) FROM races WHERE year = 2015"))
CANONICAL = [
    render_command(GetDBDescription()),
    render_command(GetTables("f1")),
    render_command(GetColumns("f1", "races")),
    FINAL,
]
COLS = render_command(GetColumns("f1", "races"))


def scripted(turns):
    return ScriptedChatModel({"*": list(turns)})


class TestAgentLoop:
    def test_canonical_four_turns(self, small):
        out = solve_agent(small, Q, scripted(CANONICAL))
        assert out.termination == "answered"
        assert out.turns == 4
        assert out.target_db == "f1"
        assert out.final_sql == "SELECT COUNT(*) FROM races WHERE year = 2015"
        roles = [m.role for m in out.transcript]
        assert roles == ["system", "user"] + ["assistant", "user"] * 3 + ["assistant"]

    def test_tool_results_are_rendered_catalog_output(self, small):
        out = solve_agent(small, Q, scripted(CANONICAL))
        assert out.transcript[3].content == protocol.render_tool_result(small.get_db_descriptions())
        assert out.transcript[5].content == protocol.render_tool_result(small.get_tables("f1"))
        assert out.transcript[7].content == protocol.render_tool_result(small.get_columns("f1", "races"))

    def test_forced_at_tenth_repeat(self, small, prompts):
        out = solve_agent(small, Q, scripted([COLS] * 11 + [FINAL]))
        assert out.termination == "forced_answered"
        assert out.turns == 12
        force = prompts.force_final.strip()
        idx = [i for i, m in enumerate(out.transcript) if m.content == force]
        assert len(idx) == 1
        # it follows the tool result of the 11th request, i.e. the 10th repeat
        assistants_before = sum(1 for m in out.transcript[: idx[0]] if m.role == "assistant")
        assert assistants_before == 11

    def test_no_force_before_threshold(self, small, prompts):
        out = solve_agent(small, Q, scripted([COLS] * 10 + [FINAL]))
        assert out.termination == "answered"
        assert all(m.content != prompts.force_final.strip() for m in out.transcript)

    def test_forced_without_sql(self, small):
        out = solve_agent(small, Q, scripted([COLS] * 12))
        assert out.termination == "forced_no_sql"
        assert out.final_sql is None and out.turns == 12

    def test_repeats_are_cumulative_across_commands(self, small):
        a, b = render_command(GetTables("f1")), COLS
        # a b a b ... : first a and first b are new, the next 10 are repeats
        out = solve_agent(small, Q, scripted([a, b] * 6 + [FINAL]))
        assert out.termination == "forced_answered"
        assert out.turns == 13

    def test_fingerprint_ignores_case(self, small):
        variants = [render_command(GetColumns(db, t)) for db, t in [("f1", "races"), ("F1", "RACES"), ("f1", " Races")]]
        out = solve_agent(small, Q, scripted((variants * 4)[:11] + [FINAL]))
        assert out.termination == "forced_answered"

    def test_garbage_hits_max_turns(self, small):
        model = scripted(["I am not sure."] * 25)
        out = solve_agent(small, Q, model)
        assert out.termination == "max_turns"
        assert out.turns == 25 and out.final_sql is None
        assert model.calls == 25
        assert sum(m.content.startswith("Protocol error (no_command)") for m in out.transcript) == 25

    def test_protocol_errors_are_not_repeats(self, small):
        out = solve_agent(small, Q, scripted(["??"] * 20 + [FINAL]))
        assert out.termination == "answered" and out.turns == 21

    def test_catalog_errors_are_fed_back(self, small):
        out = solve_agent(small, Q, scripted([render_command(GetColumns("f1", "nope")), FINAL]))
        assert out.termination == "answered"
        assert out.transcript[3].content.startswith("Unknown table 'nope'")
        assert "races" in out.transcript[3].content

    def test_model_error(self, small):
        def boom(msgs):
            raise LLMError("endpoint down")

        out = solve_agent(small, Q, CallableChatModel(boom))
        assert out.termination == "model_error" and "endpoint down" in out.error

    def test_custom_limits(self, small):
        out = solve_agent(small, Q, scripted([COLS] * 4 + [FINAL]), Limits(max_turns=25, repeat_threshold=3))
        assert out.termination == "forced_answered" and out.turns == 5
        out = solve_agent(small, Q, scripted(["x"] * 5), Limits(max_turns=5))
        assert out.termination == "max_turns" and out.turns == 5

    def test_empty_question(self, small):
        with pytest.raises(ValueError):
            solve_agent(small, "  ", scripted(CANONICAL))


class TestTokenAccounting:
    def test_total_is_sum_and_calls_grow(self, catalogs):
        for catalog in catalogs.values():
            out = solve_agent(catalog, Q, scripted(CANONICAL))
            ins = [u.input_tokens for u in out.call_usages]
            assert out.usage_total.input_tokens == sum(ins)
            assert out.usage_total.output_tokens == sum(u.output_tokens for u in out.call_usages)
            assert all(b > a for a, b in zip(ins, ins[1:]))

    def test_direct_first_call_exceeds_agent_first_call(self, catalogs):
        for catalog in catalogs.values():
            agent = solve_agent(catalog, Q, scripted(CANONICAL))
            direct = solve_direct(catalog, Q, scripted([FINAL]))
            assert direct.usage_total.input_tokens > agent.call_usages[0].input_tokens


# Adversarial models that never give a final answer on their own.
_BEHAVIOURS = {
    "repeat": lambda rng: COLS,
    "garbage": lambda rng: rng.choice(["", "hmm", "ACTION: Nope", "ACTION: GetTables\nARG: x=1"]),
    "explore": lambda rng: render_command(rng.choice([
        GetDBDescription(), GetTables("f1"), GetTables("avito"), GetColumns("f1", rng.choice(["races", "drivers", "zzz"])),
        GetTables("no_such_db"),
    ])),
    "two_commands": lambda rng: COLS + "\n" + COLS,
}


@settings(max_examples=60, deadline=None)
@given(
    plan=st.lists(st.sampled_from(sorted(_BEHAVIOURS)), min_size=1, max_size=8),
    seed=st.integers(0, 10_000),
    max_turns=st.integers(1, 30),
    threshold=st.integers(1, 12),
)
def test_loop_always_terminates(small, plan, seed, max_turns, threshold):
    rng = random.Random(seed)
    turn = iter(range(10_000))

    def adversary(msgs):
        return _BEHAVIOURS[plan[next(turn) % len(plan)]](rng)

    model = CallableChatModel(adversary)
    out = solve_agent(small, Q, model, Limits(max_turns=max_turns, repeat_threshold=threshold))
    assert out.termination in ("forced_no_sql", "max_turns")
    assert out.final_sql is None
    assert out.turns <= max_turns and model.calls == out.turns


class TestDirect:
    def test_single_call(self, small):
        model = scripted([FINAL])
        out = solve_direct(small, Q, model)
        assert out.termination == "answered" and out.turns == 1 and model.calls == 1
        assert [m.role for m in out.transcript] == ["system", "user", "assistant"]

    @pytest.mark.parametrize("reply", ["no idea", COLS, FINAL + "\n" + FINAL])
    def test_anything_else_is_protocol_failure(self, small, reply):
        model = scripted([reply])
        out = solve_direct(small, Q, model)
        assert out.termination == "protocol_failure" and out.final_sql is None
        assert model.calls == 1

    def test_prompt_holds_every_table(self, small):
        prompt = solve_direct(small, Q, scripted([FINAL])).transcript[0].content
        n = 0
        for d in small.get_db_descriptions():
            for t in small.get_tables(d.id):
                assert protocol.render_tool_result(small.get_columns(d.id, t.name)) in prompt
                n += 1
        assert n == 42

    def test_prompt_grows_with_catalog(self, catalogs):
        sizes = [len(build_direct_system_prompt(serialize_catalog(catalogs[s]))) for s in ("small", "medium", "large")]
        assert sizes == sorted(set(sizes))

    def test_schema_only_marked(self, catalogs):
        text = serialize_catalog(catalogs["large"])
        assert "## Database banking (schema only)" in text
        assert "## Database f1\n" in text


class TestPromptMirroring:
    def test_only_commands_and_metadata_differ(self, small, prompts):
        agent = build_agent_system_prompt(prompts)
        meta = serialize_catalog(small)
        direct = build_direct_system_prompt(meta, prompts)
        acquisition = prompts.acquisition.replace("{{GRAMMAR}}", protocol.grammar_doc(protocol.ACQUISITION_COMMANDS))
        metadata = prompts.metadata.replace("{{CATALOG}}", meta)
        assert acquisition in agent and metadata in direct
        assert agent.replace(acquisition, "", 1) == direct.replace(metadata, "", 1)

    def test_both_carry_final_grammar(self, small):
        final = protocol.grammar_doc(["DBQueryFinalSQL"])
        assert final in build_agent_system_prompt()
        assert final in build_direct_system_prompt(serialize_catalog(small))
        assert "ACTION: GetTables" not in build_direct_system_prompt(serialize_catalog(small))

    def test_agent_prompt_independent_of_catalog(self, universe):
        import re

        prompt = build_agent_system_prompt()
        leaked = [n for n in universe.manifest.table_names() if re.search(rf"\b{re.escape(n)}\b", prompt, re.I)]
        assert leaked == []


def test_outcome_invariant():
    with pytest.raises(ValueError):
        SolverOutcome("SELECT 1", "f1", "max_turns", 3, TokenUsage())
    with pytest.raises(ValueError):
        SolverOutcome(None, None, "answered", 3, TokenUsage())
    with pytest.raises(ValueError):
        SolverOutcome(None, None, "gave_up", 3, TokenUsage())


def test_transcript_messages_are_chat_messages(small):
    out = solve_agent(small, Q, scripted(CANONICAL))
    assert all(isinstance(m, ChatMessage) for m in out.transcript)

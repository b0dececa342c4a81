from __future__ import annotations

import json

import httpx
import pytest

from datalake_agent import llm
from datalake_agent.llm import (
    CallableChatModel,
    ChatMessage,
    LLMError,
    ModelConfig,
    OpenAIChatModel,
    ScriptedChatModel,
    ScriptExhaustedError,
    TokenUsage,
    build_model,
    estimate_tokens,
)

MSGS = [ChatMessage("system", "You answer."), ChatMessage("user", "Question: hi")]


def make_client(handler):
    return httpx.Client(transport=httpx.MockTransport(handler))


def ok_body(content="done", usage=True):
    body = {"choices": [{"message": {"role": "assistant", "content": content}}]}
    if usage:
        body["usage"] = {"prompt_tokens": 120, "completion_tokens": 7}
    return body


class TestOpenAIClient:
    def test_request_shape_and_usage(self, monkeypatch):
        monkeypatch.setenv("TEST_KEY", "sk-123")
        seen = {}

        def handler(request):
            seen["url"] = str(request.url)
            seen["auth"] = request.headers.get("authorization")
            seen["body"] = json.loads(request.content)
            return httpx.Response(200, json=ok_body())

        cfg = ModelConfig(model_name="m1", temperature=0.1, endpoint="http://x/v1", api_key_env="TEST_KEY")
        reply, usage = OpenAIChatModel(cfg, client=make_client(handler)).chat(MSGS)
        assert seen["url"] == "http://x/v1/chat/completions"
        assert seen["auth"] == "Bearer sk-123"
        assert seen["body"] == {
            "model": "m1",
            "temperature": 0.1,
            "messages": [{"role": "system", "content": "You answer."}, {"role": "user", "content": "Question: hi"}],
        }
        assert reply == ChatMessage("assistant", "done")
        assert usage == TokenUsage(120, 7, "api_reported")

    def test_missing_usage_falls_back_to_estimate(self, caplog):
        client = make_client(lambda r: httpx.Response(200, json=ok_body("abcdefgh", usage=False)))
        _, usage = OpenAIChatModel(ModelConfig(endpoint="http://x"), client=client).chat(MSGS)
        assert usage.source == "estimated"
        assert usage.output_tokens == 2
        assert usage.input_tokens == estimate_tokens("You answer.") + estimate_tokens("Question: hi")
        assert "no usage" in caplog.text

    def test_http_error(self):
        client = make_client(lambda r: httpx.Response(429, text="slow down"))
        with pytest.raises(LLMError, match="429"):
            OpenAIChatModel(ModelConfig(endpoint="http://x"), client=client).chat(MSGS)

    def test_malformed_body(self):
        client = make_client(lambda r: httpx.Response(200, json={"choices": []}))
        with pytest.raises(LLMError, match="malformed"):
            OpenAIChatModel(ModelConfig(endpoint="http://x"), client=client).chat(MSGS)

    def test_transport_retries_then_succeeds(self, monkeypatch):
        monkeypatch.setattr(llm.time, "sleep", lambda s: None)
        calls = []

        def handler(request):
            calls.append(1)
            if len(calls) < 3:
                raise httpx.ConnectError("refused")
            return httpx.Response(200, json=ok_body())

        OpenAIChatModel(ModelConfig(endpoint="http://x", max_retries=3), client=make_client(handler)).chat(MSGS)
        assert len(calls) == 3

    def test_transport_gives_up(self, monkeypatch):
        monkeypatch.setattr(llm.time, "sleep", lambda s: None)

        def handler(request):
            raise httpx.ConnectError("refused")

        with pytest.raises(LLMError, match="3 attempts"):
            OpenAIChatModel(ModelConfig(endpoint="http://x", max_retries=2), client=make_client(handler)).chat(MSGS)


class TestScripted:
    def test_turn_index_follows_assistant_messages(self):
        model = ScriptedChatModel({"agent:t1": ["a", "b"]})
        r0, _ = model.chat(MSGS, key="agent:t1")
        r1, _ = model.chat(MSGS + [r0, ChatMessage("user", "ok")], key="agent:t1")
        assert (r0.content, r1.content) == ("a", "b")
        assert model.calls == 2

    def test_key_fallbacks(self):
        model = ScriptedChatModel({"t2": ["by task"], "agent:*": ["by method"], "*": ["any"]})
        assert model.chat(MSGS, key="direct:t2")[0].content == "by task"
        assert model.chat(MSGS, key="agent:t9")[0].content == "by method"
        assert model.chat(MSGS, key="direct:t9")[0].content == "any"

    def test_exhausted(self):
        model = ScriptedChatModel({"*": ["only"]})
        with pytest.raises(ScriptExhaustedError):
            model.chat(MSGS + [ChatMessage("assistant", "x"), ChatMessage("user", "y")])
        with pytest.raises(ScriptExhaustedError):
            ScriptedChatModel({"k": ["x"]}).chat(MSGS, key="other")

    def test_from_file(self, tmp_path):
        p = tmp_path / "s.json"
        p.write_text(json.dumps({"transcripts": {"*": ["hi"]}}))
        model = build_model(ModelConfig(endpoint="scripted", script_path=str(p)))
        assert model.chat(MSGS)[0].content == "hi"
        p.write_text("[]")
        with pytest.raises(ValueError):
            ScriptedChatModel.from_file(p)

    def test_usage_is_estimated(self):
        _, usage = ScriptedChatModel({"*": ["12345"]}).chat(MSGS)
        assert usage == TokenUsage(sum(estimate_tokens(m.content) for m in MSGS), 2, "estimated")


class TestTokens:
    @pytest.mark.parametrize("text,n", [("", 0), ("a", 1), ("abcd", 1), ("abcde", 2), ("é" * 4, 2)])
    def test_estimate(self, text, n):
        assert estimate_tokens(text) == n

    def test_sum_flags_mixed_sources(self):
        a = TokenUsage(10, 1, "api_reported")
        assert (a + a).source == "api_reported"
        total = a + TokenUsage(5, 1, "estimated")
        assert total == TokenUsage(15, 2, "mixed")

    def test_validation(self):
        with pytest.raises(ValueError):
            TokenUsage(-1, 0)
        with pytest.raises(ValueError):
            ChatMessage("tool", "x")
        with pytest.raises(ValueError):
            ChatMessage("user", "")


def test_callable_model_requires_system_first():
    model = CallableChatModel(lambda msgs: "ok")
    with pytest.raises(ValueError):
        model.chat([ChatMessage("user", "hi")])
    assert model.chat(MSGS)[0].content == "ok"

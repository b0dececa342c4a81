"""Chat models: an OpenAI-compatible HTTP client and a scripted replay model.

Both implement ``chat(messages, key=None) -> (reply, usage)``. ``key`` is
only used by the scripted model to select a transcript; the turn index is
the number of assistant messages already in ``messages``.
"""

from __future__ import annotations

import json
import logging
import math
import os
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Protocol, Sequence

import httpx

log = logging.getLogger(__name__)

__all__ = [
    "CallableChatModel",
    "ChatMessage",
    "ChatModel",
    "LLMError",
    "ModelConfig",
    "OpenAIChatModel",
    "ScriptExhaustedError",
    "ScriptedChatModel",
    "TokenUsage",
    "build_model",
    "estimate_tokens",
]

ROLES = ("system", "user", "assistant")
USAGE_SOURCES = ("api_reported", "estimated", "mixed")


@dataclass(frozen=True)
class ChatMessage:
    role: str
    content: str

    def __post_init__(self) -> None:
        if self.role not in ROLES:
            raise ValueError(f"invalid role {self.role!r}")
        if self.role != "assistant" and not self.content:
            raise ValueError(f"{self.role} message content must be nonempty")

    def to_dict(self) -> dict[str, str]:
        return {"role": self.role, "content": self.content}


@dataclass(frozen=True)
class TokenUsage:
    input_tokens: int = 0
    output_tokens: int = 0
    source: str = "estimated"

    def __post_init__(self) -> None:
        if self.input_tokens < 0 or self.output_tokens < 0:
            raise ValueError("token counts must be nonnegative")
        if self.source not in USAGE_SOURCES:
            raise ValueError(f"invalid usage source {self.source!r}")

    def __add__(self, other: TokenUsage) -> TokenUsage:
        # Summing api_reported with estimated counts is flagged, not hidden.
        source = self.source if self.source == other.source else "mixed"
        return TokenUsage(
            self.input_tokens + other.input_tokens,
            self.output_tokens + other.output_tokens,
            source,
        )


def estimate_tokens(text: str) -> int:
    """Approximate token count: ceil(utf-8 byte length / 4)."""
    return math.ceil(len(text.encode("utf-8")) / 4)


def estimate_usage(messages: Sequence[ChatMessage], reply: str) -> TokenUsage:
    # No per-message framing overhead is added.
    return TokenUsage(
        input_tokens=sum(estimate_tokens(m.content) for m in messages),
        output_tokens=estimate_tokens(reply),
        source="estimated",
    )


@dataclass
class ModelConfig:
    model_name: str = "gpt-4o-mini"
    temperature: float = 0.1
    endpoint: str = "scripted"
    script_path: str | None = None
    api_key_env: str = "OPENAI_API_KEY"
    timeout: float = 120.0
    max_retries: int = 3


class LLMError(RuntimeError):
    pass


class ScriptExhaustedError(LLMError):
    """The scripted model ran out of replies: the test setup is wrong."""


class ChatModel(Protocol):
    def chat(
        self, messages: Sequence[ChatMessage], key: str | None = None
    ) -> tuple[ChatMessage, TokenUsage]: ...


def _check_messages(messages: Sequence[ChatMessage]) -> None:
    if not messages:
        raise ValueError("messages must be nonempty")
    if messages[0].role != "system":
        raise ValueError("first message must be the system prompt")


class OpenAIChatModel:
    """Client for any endpoint speaking the chat-completions JSON schema."""

    def __init__(self, config: ModelConfig, client: httpx.Client | None = None) -> None:
        self.config = config
        url = config.endpoint.rstrip("/")
        if not url.endswith("/chat/completions"):
            url += "/chat/completions"
        self.url = url
        headers = {"Content-Type": "application/json"}
        api_key = os.environ.get(config.api_key_env)
        if api_key:
            headers["Authorization"] = f"Bearer {api_key}"
        self._client = client or httpx.Client(timeout=config.timeout)
        self._headers = headers

    def chat(
        self, messages: Sequence[ChatMessage], key: str | None = None
    ) -> tuple[ChatMessage, TokenUsage]:
        _check_messages(messages)
        payload = {
            "model": self.config.model_name,
            "temperature": self.config.temperature,
            "messages": [m.to_dict() for m in messages],
        }
        response = self._post(payload)
        if response.status_code // 100 != 2:
            raise LLMError(f"endpoint returned HTTP {response.status_code}: {response.text[:500]}")
        try:
            body = response.json()
            content = body["choices"][0]["message"]["content"] or ""
        except (ValueError, KeyError, IndexError, TypeError) as exc:
            raise LLMError(f"malformed chat-completions response: {exc}") from exc

        usage = body.get("usage") or {}
        if "prompt_tokens" in usage and "completion_tokens" in usage:
            tokens = TokenUsage(int(usage["prompt_tokens"]), int(usage["completion_tokens"]), "api_reported")
        else:
            log.warning("response carries no usage field; falling back to estimated tokens")
            tokens = estimate_usage(messages, content)
        return ChatMessage("assistant", content), tokens

    def _post(self, payload: dict[str, Any]) -> httpx.Response:
        attempts = self.config.max_retries + 1
        for attempt in range(attempts):
            try:
                return self._client.post(self.url, json=payload, headers=self._headers)
            except httpx.TransportError as exc:
                if attempt == attempts - 1:
                    raise LLMError(f"transport failure after {attempts} attempts: {exc}") from exc
                delay = 0.5 * 2**attempt
                log.warning("transport error (%s); retrying in %.1fs", exc, delay)
                time.sleep(delay)
        raise AssertionError("unreachable")


@dataclass
class ScriptedChatModel:
    """Replays canned replies.

    ``transcripts`` maps a key to the list of replies, indexed by turn.
    A request for key ``"agent:t001"`` tries, in order: ``"agent:t001"``,
    ``"t001"``, ``"agent:*"``, ``"*"``.
    """

    transcripts: dict[str, list[str]]
    calls: int = field(default=0, init=False)

    @classmethod
    def from_file(cls, path: str | Path) -> ScriptedChatModel:
        """Load a script file: ``{"transcripts": {"<key>": ["turn 0", "turn 1", ...]}}``."""
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        transcripts = data.get("transcripts") if isinstance(data, dict) else None
        if not isinstance(transcripts, dict):
            raise ValueError(f"{path}: script file needs a 'transcripts' object")
        return cls({str(k): [str(t) for t in v] for k, v in transcripts.items()})

    def _lookup(self, key: str | None) -> list[str]:
        candidates = []
        if key:
            candidates.append(key)
            method, _, task = key.partition(":")
            if task:
                candidates += [task, f"{method}:*"]
        candidates.append("*")
        for c in candidates:
            if c in self.transcripts:
                return self.transcripts[c]
        raise ScriptExhaustedError(f"no scripted transcript for key {key!r}")

    def chat(
        self, messages: Sequence[ChatMessage], key: str | None = None
    ) -> tuple[ChatMessage, TokenUsage]:
        _check_messages(messages)
        turns = self._lookup(key)
        turn_index = sum(1 for m in messages if m.role == "assistant")
        if turn_index >= len(turns):
            raise ScriptExhaustedError(
                f"script for key {key!r} has {len(turns)} turns, turn {turn_index} requested"
            )
        self.calls += 1
        reply = turns[turn_index]
        return ChatMessage("assistant", reply), estimate_usage(messages, reply)


class CallableChatModel:
    """Wraps ``fn(messages) -> str``; usage is estimated. Handy in tests."""

    def __init__(self, fn: Callable[[Sequence[ChatMessage]], str]) -> None:
        self.fn = fn
        self.calls = 0

    def chat(
        self, messages: Sequence[ChatMessage], key: str | None = None
    ) -> tuple[ChatMessage, TokenUsage]:
        _check_messages(messages)
        self.calls += 1
        reply = self.fn(messages)
        return ChatMessage("assistant", reply), estimate_usage(messages, reply)


def build_model(config: ModelConfig) -> ChatModel:
    if config.endpoint == "scripted":
        if not config.script_path:
            raise ValueError("scripted model needs a script_path")
        return ScriptedChatModel.from_file(config.script_path)
    return OpenAIChatModel(config)

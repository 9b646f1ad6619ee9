"""Provider-agnostic chat-completion client.

Each supported provider family is a data-driven request mapping, not a
dedicated client class. Credentials are referenced by environment
variable name and are never serialized into transcripts or logs.
"""

from __future__ import annotations

import logging
import os
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

import httpx

log = logging.getLogger(__name__)

REDACTED = "<redacted>"


@dataclass(frozen=True)
class ProviderShape:
    """How to turn (model, prompt, options) into an HTTP request and pull
    the completion text back out of the response body."""
    auth_header: str
    auth_prefix: str
    build_body: Callable[[str, str, dict], dict]
    extract_text: Callable[[dict], str]


def _openai_body(model: str, prompt: str, options: dict) -> dict:
    return {"model": model,
            "messages": [{"role": "user", "content": prompt}],
            **options}


def _openai_text(body: dict) -> str:
    return body["choices"][0]["message"]["content"]


def _anthropic_body(model: str, prompt: str, options: dict) -> dict:
    return {"model": model, "max_tokens": options.pop("max_tokens", 4096),
            "messages": [{"role": "user", "content": prompt}], **options}


def _anthropic_text(body: dict) -> str:
    return "".join(part.get("text", "") for part in body["content"])


def _gemini_body(model: str, prompt: str, options: dict) -> dict:
    return {"contents": [{"parts": [{"text": prompt}]}],
            "generationConfig": options}


def _gemini_text(body: dict) -> str:
    return body["candidates"][0]["content"]["parts"][0]["text"]


PROVIDER_SHAPES: dict[str, ProviderShape] = {
    "openai_chat": ProviderShape("Authorization", "Bearer ",
                                 _openai_body, _openai_text),
    "anthropic_messages": ProviderShape("x-api-key", "",
                                        _anthropic_body, _anthropic_text),
    "gemini_generate": ProviderShape("x-goog-api-key", "",
                                     _gemini_body, _gemini_text),
}


@dataclass(frozen=True)
class ChatProviderConfig:
    endpoint: str
    model: str
    credential_env: str
    shape: str = "openai_chat"
    timeout_s: float = 120.0
    max_retries: int = 3
    options: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        # Credential material never leaves the process: only the env var
        # *name* is recorded in snapshots.
        return {
            "endpoint": self.endpoint,
            "model": self.model,
            "credential_env": self.credential_env,
            "shape": self.shape,
            "timeout_s": self.timeout_s,
            "max_retries": self.max_retries,
            "options": dict(self.options),
        }


class ProviderError(RuntimeError):
    pass


@dataclass
class ChatClient:
    config: ChatProviderConfig
    _client: Optional[httpx.Client] = None

    def _credential(self) -> str:
        value = os.environ.get(self.config.credential_env)
        if not value:
            raise ProviderError(
                f"credential environment variable "
                f"{self.config.credential_env!r} is not set")
        return value

    def complete(self, prompt: str) -> str:
        shape = PROVIDER_SHAPES.get(self.config.shape)
        if shape is None:
            raise ProviderError(f"unknown provider shape {self.config.shape!r}")
        headers = {shape.auth_header: shape.auth_prefix + self._credential()}
        body = shape.build_body(self.config.model, prompt,
                                dict(self.config.options))
        client = self._client or httpx.Client(timeout=self.config.timeout_s)
        last_error: Optional[Exception] = None
        for attempt in range(self.config.max_retries + 1):
            try:
                response = client.post(self.config.endpoint, json=body,
                                       headers=headers)
                response.raise_for_status()
                return shape.extract_text(response.json())
            except (httpx.HTTPError, KeyError, IndexError, ValueError) as exc:
                last_error = exc
                log.debug("provider call failed (attempt %d): %s",
                          attempt + 1, _redact(str(exc), headers))
                time.sleep(min(2.0**attempt * 0.1, 5.0))
        raise ProviderError(
            f"provider call failed after {self.config.max_retries + 1} "
            f"attempts: {_redact(str(last_error), headers)}")


def _redact(text: str, headers: dict[str, str]) -> str:
    for value in headers.values():
        if value:
            text = text.replace(value, REDACTED)
    return text

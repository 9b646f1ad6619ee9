"""Structured-output parsing for agent responses.

Agent responses may wrap a JSON document in prose or fenced code blocks;
``parse_structured_output`` extracts the first well-formed document of the
expected shape and, on failure, reports diagnostics suitable for a
corrective retry prompt.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

_FENCE = re.compile(r"```(?:json)?\s*\n(.*?)```", re.DOTALL)


@dataclass
class ParseResult:
    value: Optional[Any] = None
    diagnostics: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.value is not None


def _json_candidates(raw: str):
    for match in _FENCE.finditer(raw):
        yield match.group(1)
    # Balanced top-level {...} or [...] spans outside fences.
    for opener, closer in (("{", "}"), ("[", "]")):
        depth = 0
        start = None
        in_string = False
        escape = False
        for i, ch in enumerate(raw):
            if in_string:
                if escape:
                    escape = False
                elif ch == "\\":
                    escape = True
                elif ch == '"':
                    in_string = False
                continue
            if ch == '"':
                in_string = True
            elif ch == opener:
                if depth == 0:
                    start = i
                depth += 1
            elif ch == closer and depth:
                depth -= 1
                if depth == 0 and start is not None:
                    yield raw[start:i + 1]
                    start = None


def parse_structured_output(raw: str,
                            decode: Callable[[Any], Any]) -> ParseResult:
    """Extract the first JSON document in ``raw`` that ``decode`` accepts.

    ``decode`` takes the parsed JSON value and either returns the domain
    object or raises ValueError/KeyError/TypeError with a reason."""
    result = ParseResult()
    if not raw or not raw.strip():
        result.diagnostics.append("no structured document found: empty response")
        return result
    saw_json = False
    for candidate in _json_candidates(raw):
        try:
            parsed = json.loads(candidate)
        except json.JSONDecodeError:
            continue
        saw_json = True
        try:
            result.value = decode(parsed)
            result.diagnostics = []
            return result
        except (ValueError, KeyError, TypeError) as exc:
            result.diagnostics.append(str(exc))
    if not saw_json:
        result.diagnostics.append("no structured document found")
    return result

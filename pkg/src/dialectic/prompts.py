"""Deterministic prompt assembly for the LLM backend.

Prompts carry, in fixed order: the universal debate preamble, the value
system texts, the calibration scales, the stage's task instructions, the
serialized belief excerpts, and any stage-specific dynamic blocks (e.g.
the rendered position analysis for Stage-5 Phase 2). Oversized excerpts
are truncated by dropping the lowest-priority sections first: the
changelog, then resolved uncertainties.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .registry import Registry

UNIVERSAL_PREAMBLE = (
    "You are a council member in a structured dialectical debate. "
    "Reason carefully, assign calibrated strength values on [0, 1], and "
    "respond only with the structured document requested. Strengths are "
    "credences: do not inflate them, and revise them when arguments "
    "against them succeed."
)

ADJUDICATOR_PREAMBLE = (
    "You are the neutral adjudicator of a structured dialectical debate. "
    "Judge the substance of the arguments, not the identity of the "
    "arguer. Produce a restatement of the disagreement, a formalization, "
    "and an adjudication, then assign the four component scores."
)


@dataclass(frozen=True)
class PromptBudget:
    max_chars: int = 200_000


@dataclass
class PromptDocument:
    sections: list[tuple[str, str]] = field(default_factory=list)
    truncated_sections: list[str] = field(default_factory=list)

    def render(self) -> str:
        parts = []
        for title, body in self.sections:
            parts.append(f"## {title}\n{body}")
        return "\n\n".join(parts)


def _scale_block(registry: Registry) -> str:
    lines = []
    for scale in (registry.strength_scale, registry.logic_scale,
                  registry.ethics_scale):
        lines.append(scale.name + ":")
        for band in scale.bands:
            rng = (f"{band.lo}" if band.singleton
                   else f"({band.lo}, {band.hi}]")
            lines.append(f"  {rng} {band.label}: {band.interpretation}")
    return "\n".join(lines)


# Sections droppable under budget pressure, lowest priority first.
_DROP_ORDER = ("changelog", "resolved uncertainties")


def assemble_prompt(stage: str, registry: Registry, *,
                    persona_key: Optional[str] = None,
                    logic_key: Optional[str] = None,
                    ethics_key: Optional[str] = None,
                    task: str = "",
                    belief_excerpts: Optional[dict[str, dict]] = None,
                    dynamic_blocks: Optional[dict[str, str]] = None,
                    budget: PromptBudget = PromptBudget()) -> PromptDocument:
    doc = PromptDocument()
    is_adjudicator = persona_key is None
    doc.sections.append(("preamble", ADJUDICATOR_PREAMBLE if is_adjudicator
                         else UNIVERSAL_PREAMBLE))
    if persona_key is not None:
        if persona_key not in registry.personas:
            raise KeyError(f"unresolved persona key {persona_key!r}")
        doc.sections.append(("persona", registry.personas[persona_key].prompt_text))
    if logic_key is not None:
        if logic_key not in registry.logic_systems:
            raise KeyError(f"unresolved logic system key {logic_key!r}")
        doc.sections.append(("logic system",
                             registry.logic_systems[logic_key].prompt_text))
    if ethics_key is not None:
        if ethics_key not in registry.ethics_systems:
            raise KeyError(f"unresolved ethics system key {ethics_key!r}")
        doc.sections.append(("ethics system",
                             registry.ethics_systems[ethics_key].prompt_text))
    doc.sections.append(("calibration scales", _scale_block(registry)))
    doc.sections.append((f"task: {stage}", task))
    excerpts = dict(belief_excerpts or {})
    for name in sorted(excerpts):
        doc.sections.append((f"belief: {name}",
                             json.dumps(excerpts[name], indent=2, sort_keys=True)))
    for name, body in (dynamic_blocks or {}).items():
        doc.sections.append((name, body))
    # Truncate by dropping low-priority dynamic sections until we fit.
    for low in _DROP_ORDER:
        if len(doc.render()) <= budget.max_chars:
            break
        before = len(doc.sections)
        doc.sections = [(t, b) for t, b in doc.sections if t != low]
        if len(doc.sections) < before:
            doc.truncated_sections.append(low)
    return doc

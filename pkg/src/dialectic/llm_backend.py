"""LLM-backed implementations of the agent and adjudicator contracts.

Each stage call assembles a deterministic prompt, invokes the chat
provider, and parses structured output with bounded corrective retries;
diagnostics from a failed parse are embedded verbatim in the retry prompt.
Hard failures surface to the pipeline, which applies the degraded path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .llm import ChatClient, ChatProviderConfig, ProviderError
from .model import Belief, NodeId, Thesis
from .parsing import parse_structured_output
from .patches import Patch
from .prompts import assemble_prompt
from .protocol import (
    ATTACK_TAXONOMY,
    Challenge,
    Rebuttal,
    RebuttalAction,
    Scores,
)
from .registry import Registry
from .serialize import belief_from_dict
from .validation import validate_belief


class StructuredOutputError(RuntimeError):
    def __init__(self, stage: str, diagnostics: list[str]):
        super().__init__(f"{stage}: unparseable after retries: "
                         f"{'; '.join(diagnostics) or 'no diagnostics'}")
        self.diagnostics = diagnostics


def _decode_belief(doc) -> Belief:
    belief = belief_from_dict(doc)
    report = validate_belief(belief)
    if not report.valid:
        raise ValueError(str(report))
    return belief


def _decode_patches(doc) -> list[Patch]:
    if not isinstance(doc, list):
        raise ValueError("expected a JSON array of patches")
    return [Patch.from_dict(p) for p in doc]


@dataclass
class LLMBackend:
    """Council member + adjudicator backend over one chat provider."""
    provider: ChatProviderConfig
    registry: Registry
    logic_key: str = "classical_informal_bayesian"
    ethics_key: str = "balanced_rule_utilitarian"
    persona_by_agent: Optional[dict[str, str]] = None

    def __post_init__(self):
        self._client = ChatClient(self.provider)

    def _call(self, stage: str, decode, **prompt_kwargs):
        doc = assemble_prompt(stage, self.registry, **prompt_kwargs)
        diagnostics: list[str] = []
        for _ in range(self.provider.max_retries + 1):
            prompt = doc.render()
            if diagnostics:
                prompt += ("\n\n## corrective retry\nYour previous response "
                           "was rejected:\n" + "\n".join(diagnostics)
                           + "\nEmit only the corrected document.")
            raw = self._client.complete(prompt)
            result = parse_structured_output(raw, decode)
            if result.ok:
                return result.value
            diagnostics = result.diagnostics
        raise StructuredOutputError(stage, diagnostics)

    def _persona(self, agent: str) -> str:
        if self.persona_by_agent and agent in self.persona_by_agent:
            return self.persona_by_agent[agent]
        return agent

    # -- council member contract -------------------------------------
    def generate_opening(self, agent, topic, persona):
        return self._call(
            "stage1_opening", _decode_belief,
            persona_key=persona,
            task=(f"Topic: {topic}\nEmit your complete opening belief "
                  "document as JSON."),
        )

    def generate_challenges(self, agent, round_no, opponent, own,
                            opponent_belief, vulnerability, prior, s_max):
        from .serialize import belief_to_dict

        def decode(doc):
            if not isinstance(doc, list):
                raise ValueError("expected a JSON array of challenges")
            out = []
            for i, c in enumerate(doc[:s_max]):
                strategy = c["attack_strategy"]
                if strategy not in ATTACK_TAXONOMY:
                    raise ValueError(f"unknown attack_strategy {strategy!r}")
                out.append(Challenge(
                    id=f"r{round_no}.{agent}.{opponent}.{i}",
                    challenger=agent, defender=opponent, text=c["text"],
                    targets=tuple(NodeId.parse(t) for t in c["targets"]),
                    attack_type=ATTACK_TAXONOMY[strategy].value,
                    attack_strategy=strategy,
                ))
            return out

        return self._call(
            "stage2_challenges", decode,
            persona_key=self._persona(agent),
            task=(f"Round {round_no}. Emit up to {s_max} challenges against "
                  "the opponent belief as a JSON array with fields text, "
                  "targets, attack_strategy."),
            belief_excerpts={"own": belief_to_dict(own),
                             "opponent": belief_to_dict(opponent_belief)},
            dynamic_blocks={
                "vulnerability report": json.dumps(vulnerability.to_dict()),
                "prior exchanges": json.dumps(prior),
            },
        )

    def generate_rebuttals(self, agent, round_no, own, incoming):
        from .serialize import belief_to_dict

        def decode(doc):
            if not isinstance(doc, list) or len(doc) != len(incoming):
                raise ValueError(
                    f"expected exactly {len(incoming)} rebuttals")
            out = []
            for c, r in zip(incoming, doc):
                out.append(Rebuttal(
                    challenge_id=c.id,
                    action=RebuttalAction(r["action"]),
                    text=r["text"],
                    tentative_patches=tuple(
                        Patch.from_dict(p)
                        for p in r.get("tentative_patches", [])),
                ))
            return out

        return self._call(
            "stage3_rebuttals", decode,
            persona_key=self._persona(agent),
            task=("Emit one rebuttal per incoming challenge as a JSON array "
                  "with fields action (refute|concede|defer), text, "
                  "tentative_patches."),
            belief_excerpts={"own": belief_to_dict(own)},
            dynamic_blocks={"incoming challenges": json.dumps(
                [c.to_dict() for c in incoming])},
        )

    def revise_phase1(self, agent, round_no, own, verdicts, obligations,
                      retry, diagnostics):
        from .serialize import belief_to_dict
        task = ("Stage 5 Phase 1: emit the mandatory patches satisfying "
                "your obligations as a JSON array of patch objects.")
        if retry:
            task += f"\nYour previous batch was non-compliant: {diagnostics}"
        return self._call(
            "stage5_phase1", _decode_patches,
            persona_key=self._persona(agent), task=task,
            belief_excerpts={"own": belief_to_dict(own)},
            dynamic_blocks={
                "verdicts": json.dumps(verdicts),
                "obligations": json.dumps([
                    {"kind": ob.kind, "targets": [str(t) for t in ob.targets],
                     "challenge": ob.challenge_text}
                    for ob in obligations.all()]),
            },
        )

    def revise_phase2(self, agent, round_no, own, analysis, compliance):
        from .serialize import belief_to_dict

        def decode(doc):
            patches = [Patch.from_dict(p) for p in doc.get("patches", [])]
            thesis = None
            if doc.get("thesis"):
                t = doc["thesis"]
                thesis = Thesis(stance=t["stance"],
                                summary_bullets=tuple(t["summary_bullets"]),
                                strength=own.thesis.strength,
                                strength_reasoning=t.get("strength_reasoning", ""))
            return (patches, thesis)

        return self._call(
            "stage5_phase2", decode,
            persona_key=self._persona(agent),
            task=("Stage 5 Phase 2: emit introspective patches and an "
                  "updated thesis as {\"patches\": [...], \"thesis\": "
                  "{...}}. Strength increases on existing nodes are "
                  "filtered."),
            belief_excerpts={"own": belief_to_dict(own)},
            dynamic_blocks={"position analysis": json.dumps(analysis.to_dict())},
        )

    # -- adjudicator contract ----------------------------------------
    def score_pair(self, round_no, challenge, rebuttal,
                   challenger_excerpt, defender_excerpt):
        def decode(doc):
            scores = Scores(
                logic_challenger=float(doc["logic_challenger"]),
                ethics_challenger=float(doc["ethics_challenger"]),
                logic_defender=float(doc["logic_defender"]),
                ethics_defender=float(doc["ethics_defender"]),
            )
            return scores, doc.get("reasoning", "")

        return self._call(
            "stage4_adjudication", decode,
            logic_key=self.logic_key, ethics_key=self.ethics_key,
            task=("Adjudicate the exchange between the anonymized "
                  "Challenger and Defender. Emit JSON with "
                  "logic_challenger, ethics_challenger, logic_defender, "
                  "ethics_defender in [0,1] and reasoning with "
                  "restatement/formalization/adjudication sections."),
            belief_excerpts={"challenger": challenger_excerpt,
                             "defender": defender_excerpt},
            dynamic_blocks={
                "challenge": json.dumps(challenge.to_dict()),
                "rebuttal": json.dumps(rebuttal.to_dict()),
            },
        )

"""Agent backend contracts and the deterministic scripted backend.

The pipeline depends only on the two protocols below; the scripted
backend (used by tests and simulations) and the LLM backend (llm.py) are
interchangeable implementations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Protocol

from .graph import VulnerabilityReport
from .model import Belief, Thesis
from .patches import Patch
from .protocol import Challenge, Rebuttal, Scores
from .strength import PositionAnalysis


class AgentBackend(Protocol):
    def generate_opening(self, agent: str, topic: str, persona: str) -> Belief:
        ...

    def generate_challenges(self, agent: str, round_no: int, opponent: str,
                            own: Belief, opponent_belief: Belief,
                            vulnerability: VulnerabilityReport,
                            prior: list, s_max: int) -> list[Challenge]:
        ...

    def generate_rebuttals(self, agent: str, round_no: int, own: Belief,
                           incoming: list[Challenge]) -> list[Rebuttal]:
        ...

    def revise_phase1(self, agent: str, round_no: int, own: Belief,
                      verdicts: list, obligations, retry: bool,
                      diagnostics: str) -> list[Patch]:
        ...

    def revise_phase2(self, agent: str, round_no: int, own: Belief,
                      analysis: PositionAnalysis,
                      compliance) -> tuple[list[Patch], Optional[Thesis]]:
        ...


class AdjudicatorBackend(Protocol):
    def score_pair(self, round_no: int, challenge: Challenge,
                   rebuttal: Rebuttal, challenger_excerpt: dict,
                   defender_excerpt: dict) -> tuple[Scores, str]:
        ...


class ScenarioKeyError(KeyError):
    """An unscripted lookup: the scenario has no entry for this key."""


@dataclass
class ScriptedScenario:
    """Deterministic per-stage outputs keyed by the pipeline's call sites.

    Keys:
      openings[agent] -> Belief
      challenges[(round, challenger, defender)] -> list[Challenge]
      rebuttals[(round, defender, challenge_id)] -> Rebuttal
      scores[(round, challenge_id)] -> (Scores, reasoning)
      phase1[(round, agent)] -> list[Patch]            (optional; default [])
      phase2[(round, agent)] -> (list[Patch], Thesis|None)  (optional)
    """
    openings: dict[str, Belief] = field(default_factory=dict)
    challenges: dict[tuple, list[Challenge]] = field(default_factory=dict)
    rebuttals: dict[tuple, Rebuttal] = field(default_factory=dict)
    scores: dict[tuple, tuple[Scores, str]] = field(default_factory=dict)
    phase1: dict[tuple, list[Patch]] = field(default_factory=dict)
    phase2: dict[tuple, tuple[list[Patch], Optional[Thesis]]] = field(
        default_factory=dict)


@dataclass
class ScriptedBackend:
    """Satisfies both contracts from a ScriptedScenario.

    Mandatory stages (openings, challenges, rebuttals, scores) fail fast
    on a missing key; revision stages default to empty contributions so
    scenarios can lean on the engine's obligation enforcement."""
    scenario: ScriptedScenario

    def _get(self, table: dict, key, what: str):
        try:
            return table[key]
        except KeyError:
            raise ScenarioKeyError(f"scenario has no {what} for {key!r}") from None

    def generate_opening(self, agent, topic, persona):
        return self._get(self.scenario.openings, agent, "opening")

    def generate_challenges(self, agent, round_no, opponent, own,
                            opponent_belief, vulnerability, prior, s_max):
        out = self._get(self.scenario.challenges,
                        (round_no, agent, opponent), "challenges")
        return list(out[:s_max])

    def generate_rebuttals(self, agent, round_no, own, incoming):
        return [
            self._get(self.scenario.rebuttals,
                      (round_no, agent, ch.id), "rebuttal")
            for ch in incoming
        ]

    def revise_phase1(self, agent, round_no, own, verdicts, obligations,
                      retry, diagnostics):
        return list(self.scenario.phase1.get((round_no, agent), []))

    def revise_phase2(self, agent, round_no, own, analysis, compliance):
        return self.scenario.phase2.get((round_no, agent), ([], None))

    def score_pair(self, round_no, challenge, rebuttal,
                   challenger_excerpt, defender_excerpt):
        return self._get(self.scenario.scores,
                         (round_no, challenge.id), "adjudicator scores")


def scripted_backend(scenario: ScriptedScenario) -> ScriptedBackend:
    return ScriptedBackend(scenario)

"""Debate protocol: challenges, rebuttals, adjudication, and the
enforcement obligations each verdict creates for the defender."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .model import Belief, NodeId, NodeKind, NodeStatus, ResponseSufficiency
from .patches import Patch, PatchOp
from .taxonomy import ATTACK_TAXONOMY, strategies_for  # noqa: F401 (re-export)

PURE_MODE_CUTOFF = 0.01


class VerdictKind(str, Enum):
    CRITIQUE_VALID = "critique_valid"
    REBUTTAL_VALID = "rebuttal_valid"
    UNRESOLVED = "unresolved"


class RebuttalAction(str, Enum):
    REFUTE = "refute"
    CONCEDE = "concede"
    DEFER = "defer"


@dataclass(frozen=True)
class Challenge:
    id: str
    challenger: str
    defender: str
    text: str
    targets: tuple[NodeId, ...]
    attack_type: str
    attack_strategy: str

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "challenger": self.challenger,
            "defender": self.defender,
            "text": self.text,
            "targets": [str(t) for t in self.targets],
            "attack_type": self.attack_type,
            "attack_strategy": self.attack_strategy,
        }

    @staticmethod
    def from_dict(doc: dict) -> "Challenge":
        return Challenge(
            id=doc["id"], challenger=doc["challenger"],
            defender=doc["defender"], text=doc["text"],
            targets=tuple(NodeId.parse(t) for t in doc["targets"]),
            attack_type=doc["attack_type"],
            attack_strategy=doc["attack_strategy"],
        )


@dataclass(frozen=True)
class Rebuttal:
    challenge_id: str
    action: RebuttalAction
    text: str
    tentative_patches: tuple[Patch, ...] = ()

    def to_dict(self) -> dict:
        return {
            "challenge_id": self.challenge_id,
            "action": self.action.value,
            "text": self.text,
            "tentative_patches": [p.to_dict() for p in self.tentative_patches],
        }

    @staticmethod
    def from_dict(doc: dict) -> "Rebuttal":
        return Rebuttal(
            challenge_id=doc["challenge_id"],
            action=RebuttalAction(doc["action"]),
            text=doc["text"],
            tentative_patches=tuple(
                Patch.from_dict(p) for p in doc.get("tentative_patches", [])),
        )


@dataclass(frozen=True)
class AdjudicatorParams:
    logic_system: str = "classical_informal_bayesian"
    ethics_system: str = "balanced_rule_utilitarian"
    w_logic: float = 0.5
    w_ethics: float = 0.5
    tau: float = 0.15
    concession_forces_critique: bool = True

    def __post_init__(self):
        if abs(self.w_logic + self.w_ethics - 1.0) > 1e-9:
            raise ValueError("w_logic + w_ethics must equal 1")
        if not (0.0 <= self.w_logic <= 1.0 and 0.0 <= self.w_ethics <= 1.0):
            raise ValueError("weights must be in [0,1]")
        if not (0.0 <= self.tau <= 1.0):
            raise ValueError("tau must be in [0,1]")


@dataclass(frozen=True)
class Scores:
    logic_challenger: float
    ethics_challenger: float
    logic_defender: float
    ethics_defender: float


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    scores: Scores
    combined_challenger: float
    combined_defender: float
    reasoning: str = ""

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "scores": {
                "logic_challenger": self.scores.logic_challenger,
                "ethics_challenger": self.scores.ethics_challenger,
                "logic_defender": self.scores.logic_defender,
                "ethics_defender": self.scores.ethics_defender,
            },
            "combined_challenger": self.combined_challenger,
            "combined_defender": self.combined_defender,
            "reasoning": self.reasoning,
        }

    @staticmethod
    def from_dict(doc: dict) -> "Verdict":
        s = doc["scores"]
        return Verdict(
            kind=VerdictKind(doc["kind"]),
            scores=Scores(
                logic_challenger=s["logic_challenger"],
                ethics_challenger=s["ethics_challenger"],
                logic_defender=s["logic_defender"],
                ethics_defender=s["ethics_defender"],
            ),
            combined_challenger=doc["combined_challenger"],
            combined_defender=doc["combined_defender"],
            reasoning=doc.get("reasoning", ""),
        )


@dataclass(frozen=True)
class Exchange:
    round: int
    challenge: Challenge
    rebuttal: Rebuttal
    verdict: Verdict

    def to_dict(self) -> dict:
        return {
            "round": self.round,
            "challenge": self.challenge.to_dict(),
            "rebuttal": self.rebuttal.to_dict(),
            "verdict": self.verdict.to_dict(),
        }

    @staticmethod
    def from_dict(doc: dict) -> "Exchange":
        return Exchange(
            round=doc["round"],
            challenge=Challenge.from_dict(doc["challenge"]),
            rebuttal=Rebuttal.from_dict(doc["rebuttal"]),
            verdict=Verdict.from_dict(doc["verdict"]),
        )


def combine_and_judge(scores: Scores, params: AdjudicatorParams,
                      reasoning: str = "",
                      concession: bool = False) -> Verdict:
    """Combine the four component scores and apply the threshold rule.

    In a pure mode (one weight below the cutoff) the unused axis is forced
    to 0 before combination, making the verdict independent of it."""
    for val in (scores.logic_challenger, scores.ethics_challenger,
                scores.logic_defender, scores.ethics_defender):
        if not (0.0 <= val <= 1.0):
            raise ValueError(f"component score {val} outside [0, 1]")
    s = scores
    if params.w_ethics < PURE_MODE_CUTOFF:
        s = Scores(s.logic_challenger, 0.0, s.logic_defender, 0.0)
    elif params.w_logic < PURE_MODE_CUTOFF:
        s = Scores(0.0, s.ethics_challenger, 0.0, s.ethics_defender)
    combined_c = params.w_logic * s.logic_challenger + params.w_ethics * s.ethics_challenger
    combined_d = params.w_logic * s.logic_defender + params.w_ethics * s.ethics_defender
    # A small slack keeps on-boundary margins (e.g. 0.70 vs 0.55 at
    # tau=0.15) on the decisive side despite binary-float roundoff.
    eps = 1e-9
    if concession and params.concession_forces_critique:
        kind = VerdictKind.CRITIQUE_VALID
    elif combined_c == combined_d:
        kind = VerdictKind.UNRESOLVED
    elif combined_c - combined_d >= params.tau - eps:
        kind = VerdictKind.CRITIQUE_VALID
    elif combined_d - combined_c >= params.tau - eps:
        kind = VerdictKind.REBUTTAL_VALID
    else:
        kind = VerdictKind.UNRESOLVED
    return Verdict(kind=kind, scores=s, combined_challenger=combined_c,
                   combined_defender=combined_d, reasoning=reasoning)


@dataclass(frozen=True)
class Obligation:
    kind: str  # weaken | add_uncertainty | boost
    exchange_id: str
    targets: tuple[NodeId, ...]
    challenge_text: str = ""


@dataclass
class ObligationSet:
    weaken: list[Obligation] = field(default_factory=list)
    add_uncertainty: list[Obligation] = field(default_factory=list)
    boost: list[Obligation] = field(default_factory=list)

    def all(self) -> list[Obligation]:
        return [*self.weaken, *self.add_uncertainty, *self.boost]


def enforcement_obligations(exchanges_for_agent: list[Exchange]) -> ObligationSet:
    """Translate verdicts against an agent into its mandatory Phase-1
    workload: weaken + capped counterposition per critique_valid, a new
    uncertainty per unresolved, a defense boost per rebuttal_valid."""
    obligations = ObligationSet()
    for ex in exchanges_for_agent:
        targets = ex.challenge.targets
        if ex.verdict.kind is VerdictKind.CRITIQUE_VALID:
            obligations.weaken.append(Obligation(
                "weaken", ex.challenge.id, targets, ex.challenge.text))
        elif ex.verdict.kind is VerdictKind.UNRESOLVED:
            obligations.add_uncertainty.append(Obligation(
                "add_uncertainty", ex.challenge.id, targets, ex.challenge.text))
        else:
            obligations.boost.append(Obligation(
                "boost", ex.challenge.id, targets, ex.challenge.text))
    return obligations


def support_set(belief: Belief, targets: tuple[NodeId, ...]) -> set[NodeId]:
    """Targets plus their transitive support (dependencies toward the
    foundation tier) — the nodes a weakening patch may legitimately touch."""
    from .strength import ancestor_closure
    return set(targets) | ancestor_closure(belief, list(targets))


def _is_weakening(belief: Belief, patch: Patch,
                  allowed: set[NodeId]) -> bool:
    if patch.op is not PatchOp.UPDATE or patch.node_id not in allowed:
        return False
    node = belief.node(patch.node_id)
    if node is None:
        return False
    if patch.payload.get("status") == NodeStatus.RETRACTED.value:
        return True
    new_strength = patch.payload.get("strength")
    return (new_strength is not None
            and float(new_strength) < getattr(node, "strength", 0.0))


def _is_capped_counterposition(patch: Patch,
                               targets: tuple[NodeId, ...]) -> bool:
    if patch.op is not PatchOp.ADD or patch.target_kind is not NodeKind.COUNTERPOSITION:
        return False
    sufficiency = patch.payload.get("response_sufficiency")
    if sufficiency not in (ResponseSufficiency.PARTIAL.value,
                           ResponseSufficiency.UNADDRESSED.value):
        return False
    patch_targets = {NodeId.try_parse(t) for t in patch.payload.get("targets", [])}
    return bool(patch_targets & set(targets))


def _is_uncertainty_for(patch: Patch, targets: tuple[NodeId, ...]) -> bool:
    if patch.op is not PatchOp.ADD or patch.target_kind is not NodeKind.UNCERTAINTY:
        return False
    patch_targets = {NodeId.try_parse(t) for t in patch.payload.get("targets", [])}
    return bool(patch_targets & set(targets))


@dataclass
class ComplianceReport:
    satisfied: list[Obligation] = field(default_factory=list)
    unsatisfied: list[Obligation] = field(default_factory=list)

    @property
    def compliant(self) -> bool:
        return not self.unsatisfied


def check_obligations(belief: Belief, obligations: ObligationSet,
                      submitted: list[Patch]) -> ComplianceReport:
    """Mark each obligation satisfied or not by the submitted batch.

    Boost obligations are handled by the engine itself (it applies the
    boosts), so they are always reported satisfied here."""
    report = ComplianceReport()
    for ob in obligations.weaken:
        allowed = support_set(belief, ob.targets)
        weakened = any(_is_weakening(belief, p, allowed) for p in submitted)
        capped_x = any(_is_capped_counterposition(p, ob.targets)
                       for p in submitted)
        (report.satisfied if weakened and capped_x
         else report.unsatisfied).append(ob)
    for ob in obligations.add_uncertainty:
        ok = any(_is_uncertainty_for(p, ob.targets) for p in submitted)
        (report.satisfied if ok else report.unsatisfied).append(ob)
    report.satisfied.extend(obligations.boost)
    return report


def exchange_schedule(n_agents: int, s_challenges: int, rounds: int) -> int:
    if n_agents < 2:
        raise ValueError("a debate needs at least 2 agents")
    if s_challenges < 1 or rounds < 1:
        raise ValueError("S and R must be at least 1")
    return rounds * s_challenges * n_agents * (n_agents - 1)

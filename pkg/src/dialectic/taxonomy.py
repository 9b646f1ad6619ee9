"""The attack taxonomy: 27 named strategies in three groups.

Undermining attacks dispute premises, rebutting attacks dispute
conclusions directly, and undercutting attacks dispute the inferential
link between them.
"""

from __future__ import annotations

from .model import AttackType

ATTACK_TAXONOMY: dict[str, AttackType] = {
    # undermining (10)
    "challenge_evidence": AttackType.UNDERMINING,
    "challenge_assumption": AttackType.UNDERMINING,
    "expose_weak_foundation": AttackType.UNDERMINING,
    "demand_falsifiability": AttackType.UNDERMINING,
    "challenge_strength_calibration": AttackType.UNDERMINING,
    "press_uncertainty": AttackType.UNDERMINING,
    "over_extension": AttackType.UNDERMINING,
    "under_extension": AttackType.UNDERMINING,
    "challenge_moral_implications": AttackType.UNDERMINING,
    "expose_stakeholder_harm": AttackType.UNDERMINING,
    # rebutting (6)
    "present_counter_evidence": AttackType.REBUTTING,
    "present_counter_example": AttackType.REBUTTING,
    "exploit_counterposition": AttackType.REBUTTING,
    "offer_alternative_explanation": AttackType.REBUTTING,
    "present_ethical_counter": AttackType.REBUTTING,
    "invoke_competing_obligation": AttackType.REBUTTING,
    # undercutting (11)
    "challenge_inference_step": AttackType.UNDERCUTTING,
    "identify_circularity": AttackType.UNDERCUTTING,
    "expose_inconsistency": AttackType.UNDERCUTTING,
    "identify_equivocation": AttackType.UNDERCUTTING,
    "challenge_scope": AttackType.UNDERCUTTING,
    "circularity": AttackType.UNDERCUTTING,
    "stipulative_bias": AttackType.UNDERCUTTING,
    "conceptual_conflation": AttackType.UNDERCUTTING,
    "challenge_normative_inference": AttackType.UNDERCUTTING,
    "expose_value_conflict": AttackType.UNDERCUTTING,
    "challenge_moral_relevance": AttackType.UNDERCUTTING,
}


def strategies_for(attack_type: AttackType) -> tuple[str, ...]:
    return tuple(k for k, v in ATTACK_TAXONOMY.items() if v is attack_type)

"""Deterministic scripted-scenario construction.

Given the opening beliefs, a round/challenge budget, and a seed, builds a
ScriptedScenario whose challenges target real nodes, whose rebuttals are a
deterministic mix of refute/defer/concede, and whose adjudicator score
tables yield a mix of all three verdict kinds. The same seed always yields
the same scenario, which is what makes scripted runs bit-identical.
"""

from __future__ import annotations

import random

from .agents import ScriptedScenario
from .model import Belief, NodeKind, NodeStatus
from .patches import Patch, PatchOp
from .protocol import Challenge, Rebuttal, RebuttalAction, Scores
from .taxonomy import ATTACK_TAXONOMY


def _targetable(belief: Belief) -> list:
    """Non-retracted A/E/C nodes, the usual cross-examination targets."""
    out = []
    for kind in (NodeKind.ASSUMPTION, NodeKind.EVIDENCE, NodeKind.CLAIM):
        for nid, node in sorted(belief.collection(kind).items()):
            if node.status is not NodeStatus.RETRACTED:
                out.append(nid)
    return out


def build_scenario(openings: dict[str, Belief], rounds: int,
                   challenges_per_pair: int, seed: int = 0,
                   concede_every: int = 7) -> ScriptedScenario:
    rng = random.Random(seed)
    scenario = ScriptedScenario(openings=dict(openings))
    agents = sorted(openings)
    strategies = sorted(ATTACK_TAXONOMY)
    counter = 0
    for round_no in range(1, rounds + 1):
        for challenger in agents:
            for defender in agents:
                if challenger == defender:
                    continue
                targets = _targetable(openings[defender])
                challenges = []
                for k in range(challenges_per_pair):
                    target = targets[rng.randrange(len(targets))]
                    strategy = strategies[rng.randrange(len(strategies))]
                    challenge_id = f"r{round_no}.{challenger}.{defender}.{k}"
                    challenges.append(Challenge(
                        id=challenge_id,
                        challenger=challenger,
                        defender=defender,
                        text=(f"Challenge {challenge_id}: {strategy} "
                              f"against {target}."),
                        targets=(target,),
                        attack_type=ATTACK_TAXONOMY[strategy].value,
                        attack_strategy=strategy,
                    ))
                    counter += 1
                    if counter % concede_every == 0:
                        node = openings[defender].node(target)
                        lowered = max(0.0, round(node.strength - 0.1, 4))
                        action = RebuttalAction.CONCEDE
                        tentative = (Patch(
                            op=PatchOp.UPDATE,
                            target_kind=target.kind,
                            node_id=target,
                            payload={"strength": lowered},
                        ),)
                    else:
                        action = (RebuttalAction.REFUTE if counter % 3
                                  else RebuttalAction.DEFER)
                        tentative = ()
                    scenario.rebuttals[(round_no, defender, challenge_id)] = \
                        Rebuttal(
                            challenge_id=challenge_id,
                            action=action,
                            text=f"Rebuttal to {challenge_id} ({action.value}).",
                            tentative_patches=tentative,
                        )
                    scores = Scores(
                        logic_challenger=round(rng.uniform(0.2, 1.0), 2),
                        ethics_challenger=round(rng.uniform(0.2, 1.0), 2),
                        logic_defender=round(rng.uniform(0.2, 1.0), 2),
                        ethics_defender=round(rng.uniform(0.2, 1.0), 2),
                    )
                    scenario.scores[(round_no, challenge_id)] = (
                        scores,
                        f"Scripted adjudication of {challenge_id}: "
                        "restatement / formalization / adjudication.",
                    )
                scenario.challenges[(round_no, challenger, defender)] = challenges
    return scenario

"""Agent Performance Score, belief embeddings, and metric export."""

from __future__ import annotations

import csv
import hashlib
import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Protocol

import numpy as np

from .model import (
    Belief,
    NodeStatus,
    ResponseSufficiency,
    UncertaintyStatus,
    node_text,
)
from .protocol import Exchange, VerdictKind


@dataclass(frozen=True)
class ApsTable:
    challenger_critique_valid: float = 1.0
    challenger_rebuttal_valid: float = -0.5
    challenger_unresolved: float = 0.0
    target_critique_valid: float = -1.0
    target_rebuttal_valid: float = 1.0
    target_unresolved: float = 0.25

    def score(self, role: str, verdict: VerdictKind) -> float:
        return {
            ("challenger", VerdictKind.CRITIQUE_VALID): self.challenger_critique_valid,
            ("challenger", VerdictKind.REBUTTAL_VALID): self.challenger_rebuttal_valid,
            ("challenger", VerdictKind.UNRESOLVED): self.challenger_unresolved,
            ("target", VerdictKind.CRITIQUE_VALID): self.target_critique_valid,
            ("target", VerdictKind.REBUTTAL_VALID): self.target_rebuttal_valid,
            ("target", VerdictKind.UNRESOLVED): self.target_unresolved,
        }[(role, verdict)]


def aps(exchanges: list[Exchange], agent: str,
        upto_round: Optional[int] = None,
        table: ApsTable = ApsTable()) -> Optional[float]:
    """Cumulative mean of the agent's per-exchange scores through
    ``upto_round``; None (explicit no-data) with zero exchanges in scope."""
    scores = []
    for ex in exchanges:
        if upto_round is not None and ex.round > upto_round:
            continue
        if ex.challenge.challenger == agent:
            scores.append(table.score("challenger", ex.verdict.kind))
        elif ex.challenge.defender == agent:
            scores.append(table.score("target", ex.verdict.kind))
    if not scores:
        return None
    return sum(scores) / len(scores)


class TextEncoder(Protocol):
    dimension: int

    def encode(self, text: str) -> np.ndarray:
        ...


@dataclass
class HashingEncoder:
    """Deterministic hash-based token-bag encoder for tests and offline
    runs. Not semantic — real runs plug in a sentence transformer via the
    same contract."""
    dimension: int = 8

    def encode(self, text: str) -> np.ndarray:
        vec = np.zeros(self.dimension, dtype=np.float64)
        for token in re.findall(r"\w+", text.lower()):
            digest = hashlib.sha256(token.encode()).digest()
            index = digest[0] % self.dimension
            sign = 1.0 if digest[1] % 2 == 0 else -1.0
            vec[index] += sign
        norm = np.linalg.norm(vec)
        return vec / norm if norm > 0 else vec


def component_embedding(nodes: list[tuple[str, float]],
                        encoder: TextEncoder) -> np.ndarray:
    """Strength-weighted mean of node encodings; unweighted mean when all
    weights are zero; zero vector for an empty list."""
    if not nodes:
        return np.zeros(encoder.dimension, dtype=np.float64)
    vectors = []
    for text, strength in nodes:
        if not (0.0 <= strength <= 1.0):
            raise ValueError(f"strength {strength} outside [0, 1]")
        vectors.append(encoder.encode(text))
    weights = np.array([s for _, s in nodes], dtype=np.float64)
    stack = np.stack(vectors)
    total = weights.sum()
    if total == 0.0:
        return stack.mean(axis=0)
    return (weights[:, None] * stack).sum(axis=0) / total


COUNT_DIVISOR = 50.0


def belief_embedding(belief: Belief, encoder: TextEncoder,
                     count_divisor: float = COUNT_DIVISOR) -> np.ndarray:
    """Concatenation of ten semantic component vectors and an 11-scalar
    block; length 10 * d_phi + 11. Retracted nodes are excluded."""
    def active(collection):
        return [n for n in sorted(collection.values(), key=lambda x: x.id)
                if n.status is not NodeStatus.RETRACTED]

    d_nodes = active(belief.definitions)
    a_nodes = active(belief.assumptions)
    e_nodes = active(belief.evidence)
    c_nodes = active(belief.claims)
    weighted = [
        [(node_text(n), n.strength) for n in d_nodes],
        [(node_text(n), n.strength) for n in a_nodes],
        [(node_text(n), n.strength) for n in e_nodes],
        [(node_text(n), n.strength) for n in c_nodes],
        [(belief.thesis.stance + " " + " ".join(belief.thesis.summary_bullets),
          belief.thesis.strength)],
    ]
    open_questions = [
        (u.question, 0.0)
        for u in sorted(belief.uncertainties.values(), key=lambda x: x.id)
        if u.status is UncertaintyStatus.ACTIVE
    ]
    x_buckets = []
    for sufficiency in (ResponseSufficiency.PARTIAL,
                        ResponseSufficiency.SUFFICIENT,
                        ResponseSufficiency.UNADDRESSED,
                        ResponseSufficiency.MOOT):
        x_buckets.append([
            (node_text(x), 0.0)
            for x in sorted(belief.counterpositions.values(), key=lambda n: n.id)
            if x.response_sufficiency is sufficiency
        ])
    blocks = [component_embedding(group, encoder) for group in weighted]
    blocks.append(component_embedding(open_questions, encoder))
    blocks.extend(component_embedding(b, encoder) for b in x_buckets)

    def avg(nodes):
        return sum(n.strength for n in nodes) / len(nodes) if nodes else 0.0

    scalars = np.array([
        len(belief.definitions) / count_divisor,
        len(belief.assumptions) / count_divisor,
        len(belief.evidence) / count_divisor,
        len(belief.claims) / count_divisor,
        len(belief.counterpositions) / count_divisor,
        len(belief.uncertainties) / count_divisor,
        avg(d_nodes), avg(a_nodes), avg(e_nodes), avg(c_nodes),
        belief.thesis.strength,
    ], dtype=np.float64)
    return np.concatenate(blocks + [scalars])


def embedding_dimension(encoder: TextEncoder) -> int:
    return 10 * encoder.dimension + 11


@dataclass
class MetricsRow:
    round: int
    agent: str
    thesis_strength: float
    aps: Optional[float]
    counts: dict[str, int] = field(default_factory=dict)
    verdicts: dict[str, int] = field(default_factory=dict)
    degraded: bool = False


METRICS_COLUMNS = [
    "round", "agent", "thesis_strength", "aps",
    "count_D", "count_A", "count_E", "count_C", "count_X", "count_U",
    "critique_valid", "rebuttal_valid", "unresolved", "degraded",
]


def metrics_row(belief: Belief, agent: str, round_no: int,
                exchanges: list[Exchange],
                degraded: bool = False) -> MetricsRow:
    verdicts = {k.value: 0 for k in VerdictKind}
    for ex in exchanges:
        if ex.round == round_no and agent in (ex.challenge.challenger,
                                              ex.challenge.defender):
            verdicts[ex.verdict.kind.value] += 1
    return MetricsRow(
        round=round_no,
        agent=agent,
        thesis_strength=belief.thesis.strength,
        aps=aps(exchanges, agent, upto_round=round_no),
        counts={
            "D": len(belief.definitions), "A": len(belief.assumptions),
            "E": len(belief.evidence), "C": len(belief.claims),
            "X": len(belief.counterpositions), "U": len(belief.uncertainties),
        },
        verdicts=verdicts,
        degraded=degraded,
    )


def write_metrics_csv(rows: list[MetricsRow], path: Path) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(METRICS_COLUMNS)
        for row in rows:
            writer.writerow([
                row.round, row.agent, row.thesis_strength,
                "" if row.aps is None else row.aps,
                row.counts["D"], row.counts["A"], row.counts["E"],
                row.counts["C"], row.counts["X"], row.counts["U"],
                row.verdicts["critique_valid"], row.verdicts["rebuttal_valid"],
                row.verdicts["unresolved"], int(row.degraded),
            ])


def export_metrics(artifact_dir: Path, exchanges: list[Exchange],
                   beliefs_by_round: dict[tuple[str, int], Belief],
                   encoder: TextEncoder) -> dict[str, Path]:
    """Write the analysis artifact set next to the run outputs: per-round
    APS series, verdict and attack-type histograms, and the embedding
    matrix (rows = (agent, round))."""
    artifact_dir = Path(artifact_dir)
    out: dict[str, Path] = {}

    agents = sorted({a for a, _ in beliefs_by_round})
    rounds = sorted({r for _, r in beliefs_by_round})

    aps_path = artifact_dir / "aps_series.csv"
    with open(aps_path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["round", "agent", "aps"])
        for r in rounds:
            for a in agents:
                value = aps(exchanges, a, upto_round=r)
                writer.writerow([r, a, "" if value is None else value])
    out["aps_series"] = aps_path

    verdict_path = artifact_dir / "verdict_histogram.csv"
    with open(verdict_path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["agent", "role", "critique_valid", "rebuttal_valid",
                         "unresolved"])
        for a in agents:
            for role in ("challenger", "defender"):
                hist = {k.value: 0 for k in VerdictKind}
                for ex in exchanges:
                    who = (ex.challenge.challenger if role == "challenger"
                           else ex.challenge.defender)
                    if who == a:
                        hist[ex.verdict.kind.value] += 1
                writer.writerow([a, role, hist["critique_valid"],
                                 hist["rebuttal_valid"], hist["unresolved"]])
    out["verdict_histogram"] = verdict_path

    attack_path = artifact_dir / "attack_histogram.csv"
    with open(attack_path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["agent", "undermining", "rebutting", "undercutting"])
        for a in agents:
            hist = {"undermining": 0, "rebutting": 0, "undercutting": 0}
            for ex in exchanges:
                if ex.challenge.challenger == a:
                    hist[ex.challenge.attack_type] += 1
            writer.writerow([a, hist["undermining"], hist["rebutting"],
                             hist["undercutting"]])
    out["attack_histogram"] = attack_path

    emb_path = artifact_dir / "embeddings.csv"
    with open(emb_path, "w", newline="") as handle:
        writer = csv.writer(handle)
        dim = embedding_dimension(encoder)
        writer.writerow(["agent", "round"] + [f"z{i}" for i in range(dim)])
        for a in agents:
            for r in rounds:
                belief = beliefs_by_round.get((a, r))
                if belief is None:
                    continue
                vec = belief_embedding(belief, encoder)
                writer.writerow([a, r] + [repr(v) for v in vec])
    out["embeddings"] = emb_path
    return out

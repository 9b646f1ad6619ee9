"""The strength engine: thesis strength, its gradient, dependency-ceiling
enforcement, defense boosts with ancestor cascades, and position analysis.

All operations are pure: each takes a belief and returns a new belief plus
a change log. Strengths are rounded to 4 decimals after every mutation so
in-memory values always equal their serialized form.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from typing import Optional

from .model import (
    Belief,
    ClaimNode,
    NodeId,
    NodeKind,
    NodeStatus,
    Thesis,
    active_dependencies_of,
    dependencies_of,
    round_strength,
)


@dataclass(frozen=True)
class StrengthParams:
    p: float = 1.0
    s_orph: float = 0.5
    boost_b: float = 0.02
    boost_cmax: float = 0.15

    def __post_init__(self):
        if self.p <= 0:
            raise ValueError(f"p must be positive, got {self.p}")
        if not (0.0 <= self.s_orph <= 1.0):
            raise ValueError(f"s_orph must be in [0,1], got {self.s_orph}")
        if self.boost_b < 0 or self.boost_cmax < 0:
            raise ValueError("boost parameters must be nonnegative")


@dataclass(frozen=True)
class ChangeRecord:
    node_id: str
    old_strength: float
    new_strength: float
    cause: str


@dataclass
class ChangeLog:
    records: list[ChangeRecord] = field(default_factory=list)

    def add(self, node_id, old: float, new: float, cause: str) -> None:
        self.records.append(ChangeRecord(str(node_id), old, new, cause))

    def extend(self, other: "ChangeLog") -> None:
        self.records.extend(other.records)

    def touched(self) -> set[str]:
        return {r.node_id for r in self.records}

    def __len__(self) -> int:
        return len(self.records)


def breadth_multiplier(n: int, p: float) -> float:
    return n**p / (n**p + 1.0)


def thesis_strength(active_claim_strengths: list[float], p: float = 1.0) -> float:
    if p <= 0:
        raise ValueError(f"p must be positive, got {p}")
    for s in active_claim_strengths:
        if not (0.0 <= s <= 1.0):
            raise ValueError(f"claim strength {s} outside [0, 1]")
    n = len(active_claim_strengths)
    if n == 0:
        return 0.0
    return (sum(active_claim_strengths) / n) * breadth_multiplier(n, p)


@dataclass(frozen=True)
class GradientReport:
    avg_strength: float
    active_count: int
    d_savg: float
    d_n: float


def thesis_gradient(avg_strength: float, n: int, p: float = 1.0) -> GradientReport:
    if n < 1:
        raise ValueError("gradient undefined on an empty claim set")
    if not (0.0 <= avg_strength <= 1.0):
        raise ValueError(f"avg strength {avg_strength} outside [0, 1]")
    if p <= 0:
        raise ValueError(f"p must be positive, got {p}")
    denom = (n**p + 1.0) ** 2
    return GradientReport(
        avg_strength=avg_strength,
        active_count=n,
        d_savg=breadth_multiplier(n, p),
        d_n=avg_strength * p * n ** (p - 1.0) / denom,
    )


def recompute_thesis(belief: Belief, params: StrengthParams,
                     log: Optional[ChangeLog] = None,
                     cause: str = "thesis_recompute") -> Belief:
    strengths = [c.strength for c in belief.active_claims()]
    new = round_strength(thesis_strength(strengths, params.p))
    if new != belief.thesis.strength:
        if log is not None:
            log.add("thesis", belief.thesis.strength, new, cause)
        belief = belief.with_thesis(replace(belief.thesis, strength=new))
    return belief


def _ceiling_for(belief: Belief, node, params: StrengthParams) -> Optional[float]:
    """The dependency ceiling for a node, or None when unconstrained.

    Definitions have no dependencies and are exempt; nodes whose every
    dependency is retracted are orphans capped at s_orph."""
    if node.id.kind is NodeKind.DEFINITION:
        return None
    deps = dependencies_of(belief, node.id)
    if not deps:
        return None
    active = [d for d in deps if belief.node(d) is not None
              and not belief.is_retracted(d)]
    if not active:
        return params.s_orph
    return min(belief.node(d).strength for d in active)


def enforce_constraints(belief: Belief,
                        params: StrengthParams) -> tuple[Belief, ChangeLog]:
    """Lower strengths until no node exceeds its weakest active dependency;
    propagates breadth-first from the foundation tier, then recomputes the
    thesis. Never raises any strength."""
    log = ChangeLog()
    # Retracted nodes are pinned at 0 before propagation.
    for node in belief.strength_bearing_nodes().values():
        if node.status is NodeStatus.RETRACTED and node.strength != 0.0:
            log.add(node.id, node.strength, 0.0, "retraction_zero")
            belief = belief.with_node(replace(node, strength=0.0))
    order = (
        [n.id for n in sorted(belief.assumptions.values(), key=lambda x: x.id)]
        + [n.id for n in sorted(belief.evidence.values(), key=lambda x: x.id)]
        + _claims_topological(belief)
    )
    changed = True
    while changed:
        changed = False
        for nid in order:
            node = belief.node(nid)
            if node.status is NodeStatus.RETRACTED:
                continue
            ceiling = _ceiling_for(belief, node, params)
            if ceiling is None:
                continue
            ceiling = round_strength(ceiling)
            if node.strength > ceiling:
                log.add(nid, node.strength, ceiling, "dependency_ceiling")
                belief = belief.with_node(replace(node, strength=ceiling))
                changed = True
    belief = recompute_thesis(belief, params, log)
    return belief, log


def _claims_topological(belief: Belief) -> list[NodeId]:
    """Claims ordered so every claim follows its claim dependencies."""
    pending = {
        cid: {d for d in c.depends_on
              if d.kind is NodeKind.CLAIM and d in belief.claims}
        for cid, c in belief.claims.items()
    }
    order: list[NodeId] = []
    placed: set[NodeId] = set()
    while pending:
        ready = sorted(cid for cid, deps in pending.items()
                       if deps <= placed)
        if not ready:  # cycle: fall back to id order for the remainder
            order.extend(sorted(pending))
            break
        for cid in ready:
            order.append(cid)
            placed.add(cid)
            del pending[cid]
    return order


def ancestor_closure(belief: Belief, targets: list[NodeId]) -> set[NodeId]:
    """All dependency ancestors of the targets, toward the foundation tier:
    depends_on chains, and the definitions grounding every A/E reached."""
    seen: set[NodeId] = set()
    queue = deque(targets)
    roots = set(targets)
    while queue:
        nid = queue.popleft()
        node = belief.node(nid)
        if node is None:
            continue
        for dep in dependencies_of(belief, nid):
            if dep not in seen and dep not in roots:
                seen.add(dep)
                queue.append(dep)
    return seen


def apply_defense_boosts(belief: Belief, defended_targets: list[NodeId],
                         params: StrengthParams) -> tuple[Belief, ChangeLog]:
    """Apply the defense boost to each target and cascade the same
    increment through the target's ancestor closure; every node is boosted
    at most once per call and capped by its own three-way minimum."""
    log = ChangeLog()
    for t in defended_targets:
        node = belief.node(t)
        if node is None:
            raise ValueError(f"defense target {t} does not exist")
        if t.kind in (NodeKind.COUNTERPOSITION, NodeKind.UNCERTAINTY):
            raise ValueError(f"defense target {t} is not strength-bearing")
        if node.status is NodeStatus.RETRACTED:
            raise ValueError(f"defense target {t} is retracted")

    def boost(nid: NodeId, direct: bool) -> None:
        nonlocal belief
        node = belief.node(nid)
        if node is None or node.status is NodeStatus.RETRACTED:
            return
        new = round_strength(min(
            node.strength + params.boost_b,
            node.original_strength + params.boost_cmax,
            1.0,
        ))
        updates = {}
        if new != node.strength:
            log.add(nid, node.strength, new, "defense_boost")
            updates["strength"] = new
        if direct:
            updates["consecutive_defenses"] = node.consecutive_defenses + 1
        if updates:
            belief = belief.with_node(replace(node, **updates))

    direct = list(dict.fromkeys(defended_targets))
    for nid in direct:
        boost(nid, direct=True)
    cascade = ancestor_closure(belief, direct) - set(direct)
    for nid in sorted(cascade):
        boost(nid, direct=False)
    belief, enf_log = enforce_constraints(belief, params)
    log.extend(enf_log)
    return belief, log


@dataclass(frozen=True)
class Scenario:
    label: str
    projected: Optional[float]
    applicable: bool = True


@dataclass(frozen=True)
class WeakestDependency:
    claim: NodeId
    claim_strength: float
    dependency: Optional[NodeId]
    dependency_strength: Optional[float]


@dataclass(frozen=True)
class PositionAnalysis:
    gradient: Optional[GradientReport]
    scenario_raise_avg: Scenario
    scenario_add_avg: Scenario
    scenario_add_above: Scenario
    scenario_retract_weakest: Scenario
    weakest_dependencies: tuple[WeakestDependency, ...]
    orphans: tuple[NodeId, ...]
    recommendation: str

    def scenarios(self) -> tuple[Scenario, ...]:
        return (self.scenario_raise_avg, self.scenario_add_above,
                self.scenario_add_avg, self.scenario_retract_weakest)

    def to_dict(self) -> dict:
        return {
            "gradient": None if self.gradient is None else {
                "avg_strength": self.gradient.avg_strength,
                "active_count": self.gradient.active_count,
                "d_savg": self.gradient.d_savg,
                "d_n": self.gradient.d_n,
            },
            "scenarios": {
                s.label: {"projected": s.projected, "applicable": s.applicable}
                for s in self.scenarios()
            },
            "weakest_dependencies": [
                {
                    "claim": str(w.claim),
                    "claim_strength": w.claim_strength,
                    "dependency": None if w.dependency is None else str(w.dependency),
                    "dependency_strength": w.dependency_strength,
                }
                for w in self.weakest_dependencies
            ],
            "orphans": [str(o) for o in self.orphans],
            "recommendation": self.recommendation,
        }


def position_analysis(belief: Belief, params: StrengthParams,
                      raise_increment: float = 0.05,
                      add_above_delta: float = 0.10) -> PositionAnalysis:
    """Project thesis strength under the four revision scenarios via exact
    re-evaluation of the thesis formula on each hypothetical claim set."""
    active = belief.active_claims()
    strengths = [c.strength for c in active]
    n = len(strengths)
    p = params.p
    if n:
        s_avg = sum(strengths) / n
        gradient = thesis_gradient(s_avg, n, p)
        raise_avg = Scenario(
            "raise_avg",
            thesis_strength([min(s + raise_increment, 1.0) for s in strengths], p),
        )
        retract = Scenario(
            "retract_weakest",
            thesis_strength(sorted(strengths)[1:], p) if n > 1
            else thesis_strength([], p),
        )
    else:
        s_avg = 0.0
        gradient = None
        raise_avg = Scenario("raise_avg", None, applicable=False)
        retract = Scenario("retract_weakest", None, applicable=False)
    add_avg = Scenario("add_avg", thesis_strength(strengths + [s_avg], p))
    add_above = Scenario(
        "add_above",
        thesis_strength(strengths + [min(s_avg + add_above_delta, 1.0)], p),
    )
    weakest = []
    for claim in active:
        deps = [d for d in claim.depends_on
                if belief.node(d) is not None and not belief.is_retracted(d)]
        if deps:
            limiting = min(deps, key=lambda d: (belief.node(d).strength, d))
            weakest.append(WeakestDependency(
                claim.id, claim.strength, limiting,
                belief.node(limiting).strength,
            ))
        else:
            weakest.append(WeakestDependency(claim.id, claim.strength, None, None))
    orphans = tuple(
        c.id for c in active
        if c.depends_on and all(belief.is_retracted(d) for d in c.depends_on)
    )
    # Argmax over projected strength; ties broken by fixed scenario order.
    ordered = (raise_avg, add_above, add_avg, retract)
    candidates = [s for s in ordered if s.applicable and s.projected is not None]
    recommendation = max(candidates,
                         key=lambda s: s.projected).label if candidates else "add_above"
    return PositionAnalysis(
        gradient=gradient,
        scenario_raise_avg=raise_avg,
        scenario_add_avg=add_avg,
        scenario_add_above=add_above,
        scenario_retract_weakest=retract,
        weakest_dependencies=tuple(weakest),
        orphans=orphans,
        recommendation=recommendation,
    )

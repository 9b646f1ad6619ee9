"""The belief dependency graph and the targeting reports built from it."""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import (
    Belief,
    Importance,
    NodeId,
    NodeKind,
    NodeStatus,
    ResponseSufficiency,
    UncertaintyStatus,
    dependencies_of,
)
from .validation import ValidationReport, validate_belief

THESIS = "thesis"


class InvalidBeliefError(ValueError):
    def __init__(self, report: ValidationReport):
        super().__init__(f"belief failed validation:\n{report}")
        self.report = report


@dataclass(frozen=True)
class BeliefGraph:
    nodes: frozenset[NodeId]
    strength_edges: frozenset[tuple[NodeId | str, NodeId | str]]
    challenge_edges: frozenset[tuple[NodeId, NodeId]]


def build_graph(belief: Belief, *, validated: bool = False) -> BeliefGraph:
    """Build the dependency graph. Strength edges run from support toward
    the supported node (D -> A/E, dep -> C, active C -> thesis); challenge
    edges run from X/U nodes to their targets."""
    if not validated:
        report = validate_belief(belief)
        if not report.valid:
            raise InvalidBeliefError(report)
    nodes: set[NodeId] = set()
    strength_edges: set[tuple] = set()
    challenge_edges: set[tuple[NodeId, NodeId]] = set()
    for collection in (belief.definitions, belief.assumptions, belief.evidence,
                       belief.claims, belief.counterpositions,
                       belief.uncertainties):
        nodes.update(collection)
    for node in list(belief.assumptions.values()) + list(belief.evidence.values()):
        for d in node.supported_by_definitions:
            strength_edges.add((d, node.id))
    for claim in belief.claims.values():
        for dep in claim.depends_on:
            strength_edges.add((dep, claim.id))
        if claim.status is not NodeStatus.RETRACTED:
            strength_edges.add((claim.id, THESIS))
    for x in belief.counterpositions.values():
        for t in x.targets:
            challenge_edges.add((x.id, t))
    for u in belief.uncertainties.values():
        for t in u.targets:
            challenge_edges.add((u.id, t))
    return BeliefGraph(
        nodes=frozenset(nodes),
        strength_edges=frozenset(strength_edges),
        challenge_edges=frozenset(challenge_edges),
    )


def find_orphans(graph: BeliefGraph, belief: Belief) -> list[NodeId]:
    """Non-retracted A/E/C nodes all of whose declared dependencies are
    retracted. Definitions have no dependencies and are never orphans."""
    orphans = []
    for kind in (NodeKind.ASSUMPTION, NodeKind.EVIDENCE, NodeKind.CLAIM):
        for nid, node in sorted(belief.collection(kind).items()):
            if node.status is NodeStatus.RETRACTED:
                continue
            deps = dependencies_of(belief, nid)
            if deps and all(belief.is_retracted(d) for d in deps):
                orphans.append(nid)
    return orphans


@dataclass(frozen=True)
class VulnerabilityReport:
    low_strength: tuple[tuple[NodeId, float], ...]
    open_counterpositions: tuple[NodeId, ...]
    open_uncertainties: tuple[NodeId, ...]
    orphans: tuple[NodeId, ...]

    def to_dict(self) -> dict:
        return {
            "low_strength": [
                {"id": str(nid), "strength": s} for nid, s in self.low_strength
            ],
            "open_counterpositions": [str(i) for i in self.open_counterpositions],
            "open_uncertainties": [str(i) for i in self.open_uncertainties],
            "orphans": [str(i) for i in self.orphans],
        }


def vulnerability_report(belief: Belief, low_threshold: float) -> VulnerabilityReport:
    """Aggregate the prioritized cross-examination targets: weak nodes,
    counterpositions still open, live substantial uncertainties, orphans."""
    low = tuple(
        (node.id, node.strength)
        for node in sorted(belief.strength_bearing_nodes().values(),
                           key=lambda n: n.id)
        if node.status is not NodeStatus.RETRACTED
        and node.strength < low_threshold
    )
    open_x = tuple(
        nid for nid, x in sorted(belief.counterpositions.items())
        if x.response_sufficiency in (ResponseSufficiency.PARTIAL,
                                      ResponseSufficiency.UNADDRESSED)
    )
    open_u = tuple(
        nid for nid, u in sorted(belief.uncertainties.items())
        if u.status is UncertaintyStatus.ACTIVE
        and u.importance in (Importance.HIGH, Importance.MEDIUM)
    )
    graph = build_graph(belief, validated=True)
    return VulnerabilityReport(
        low_strength=low,
        open_counterpositions=open_x,
        open_uncertainties=open_u,
        orphans=tuple(find_orphans(graph, belief)),
    )

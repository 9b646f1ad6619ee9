"""Belief document model: typed nodes, identifiers, and the belief container.

A belief is a thesis plus six identifier-keyed node collections
(definitions, assumptions, evidence, claims, counterpositions,
uncertainties). All types are immutable value objects; mutation is
expressed as copy-with-changes via :func:`dataclasses.replace`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional


class NodeKind(str, Enum):
    DEFINITION = "definition"
    ASSUMPTION = "assumption"
    EVIDENCE = "evidence"
    CLAIM = "claim"
    COUNTERPOSITION = "counterposition"
    UNCERTAINTY = "uncertainty"

    @property
    def prefix(self) -> str:
        return _KIND_PREFIX[self]


_KIND_PREFIX = {
    NodeKind.DEFINITION: "D",
    NodeKind.ASSUMPTION: "A",
    NodeKind.EVIDENCE: "E",
    NodeKind.CLAIM: "C",
    NodeKind.COUNTERPOSITION: "X",
    NodeKind.UNCERTAINTY: "U",
}
_PREFIX_KIND = {v: k for k, v in _KIND_PREFIX.items()}

_ID_RE = re.compile(r"^([DAECXU])([1-9][0-9]*)$")


@dataclass(frozen=True, order=True)
class NodeId:
    """Prefixed node identifier, rendered as e.g. D1, A3, E12, X7."""

    kind: NodeKind
    index: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"node index must be positive, got {self.index}")

    def __str__(self) -> str:
        return f"{self.kind.prefix}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "NodeId":
        m = _ID_RE.match(text)
        if not m:
            raise ValueError(f"malformed node id: {text!r}")
        return cls(_PREFIX_KIND[m.group(1)], int(m.group(2)))

    @classmethod
    def try_parse(cls, text: str) -> Optional["NodeId"]:
        try:
            return cls.parse(text)
        except (ValueError, TypeError):
            return None


class NodeStatus(str, Enum):
    ACTIVE = "active"
    REVISED = "revised"
    RETRACTED = "retracted"


class UncertaintyStatus(str, Enum):
    ACTIVE = "active"
    RESOLVED = "resolved"


class ResponseSufficiency(str, Enum):
    SUFFICIENT = "sufficient"
    PARTIAL = "partial"
    UNADDRESSED = "unaddressed"
    MOOT = "moot"


class AssumptionType(str, Enum):
    FOUNDATIONAL = "foundational"
    EMPIRICAL = "empirical"
    METHODOLOGICAL = "methodological"
    SCOPING = "scoping"


class EvidenceType(str, Enum):
    EMPIRICAL = "empirical"
    CONCEPTUAL = "conceptual"
    EXPERT_CONSENSUS = "expert_consensus"


class InferenceRole(str, Enum):
    PREMISE = "premise"
    INFERENCE = "inference"
    CONCLUSION = "conclusion"


class InferenceType(str, Enum):
    DEDUCTIVE = "deductive"
    INDUCTIVE = "inductive"
    ABDUCTIVE = "abductive"


class AttackType(str, Enum):
    UNDERMINING = "undermining"
    REBUTTING = "rebutting"
    UNDERCUTTING = "undercutting"


class Importance(str, Enum):
    HIGH = "high"
    MEDIUM = "medium"
    LOW = "low"


def round_strength(value: float) -> float:
    """Strengths are carried at 4-decimal precision everywhere the engine
    writes them, so in-memory state matches serialized state exactly."""
    return round(float(value), 4)


@dataclass(frozen=True)
class InferenceStep:
    role: InferenceRole
    text: str
    reference: Optional[NodeId] = None  # premise steps only
    inference_type: Optional[InferenceType] = None  # inference steps only


@dataclass(frozen=True)
class Prediction:
    statement: str
    test: str
    decision_criterion: str
    potential_falsifiers: tuple[str, ...] = ()


@dataclass(frozen=True)
class DefinitionNode:
    id: NodeId
    term: str
    definition: str
    strength: float
    strength_justification: str
    status: NodeStatus
    used_by: tuple[NodeId, ...] = ()
    original_strength: float = 0.0
    consecutive_defenses: int = 0


@dataclass(frozen=True)
class AssumptionNode:
    id: NodeId
    type: AssumptionType
    statement: str
    supports_claims: tuple[NodeId, ...]
    supported_by_definitions: tuple[NodeId, ...]
    strength: float
    strength_justification: str
    status: NodeStatus
    original_strength: float = 0.0
    consecutive_defenses: int = 0


@dataclass(frozen=True)
class EvidenceNode:
    id: NodeId
    type: EvidenceType
    summary: str
    source: str
    supports_claims: tuple[NodeId, ...]
    supported_by_definitions: tuple[NodeId, ...]
    strength: float
    strength_justification: str
    status: NodeStatus
    original_strength: float = 0.0
    consecutive_defenses: int = 0


@dataclass(frozen=True)
class ClaimNode:
    id: NodeId
    type: str  # free-form label
    statement: str
    depends_on: tuple[NodeId, ...]
    strength: float
    strength_justification: str
    status: NodeStatus
    inference_chain: tuple[InferenceStep, ...]
    predictions: tuple[Prediction, ...]
    original_strength: float = 0.0
    consecutive_defenses: int = 0


@dataclass(frozen=True)
class CounterpositionNode:
    id: NodeId
    targets: tuple[NodeId, ...]
    attack_type: AttackType
    attack_strategy: str
    statement: str
    my_response: str
    response_sufficiency: ResponseSufficiency


@dataclass(frozen=True)
class UncertaintyNode:
    id: NodeId
    targets: tuple[NodeId, ...]
    question: str
    importance: Importance
    status: UncertaintyStatus
    resolution_note: str = ""


@dataclass(frozen=True)
class Thesis:
    stance: str
    summary_bullets: tuple[str, ...]
    strength: float
    strength_reasoning: str = ""


StrengthBearingNode = DefinitionNode | AssumptionNode | EvidenceNode | ClaimNode
AnyNode = StrengthBearingNode | CounterpositionNode | UncertaintyNode

STRENGTH_BEARING_KINDS = (
    NodeKind.DEFINITION,
    NodeKind.ASSUMPTION,
    NodeKind.EVIDENCE,
    NodeKind.CLAIM,
)


@dataclass(frozen=True)
class Belief:
    """The complete belief document."""

    thesis: Thesis
    definitions: dict[NodeId, DefinitionNode] = field(default_factory=dict)
    assumptions: dict[NodeId, AssumptionNode] = field(default_factory=dict)
    evidence: dict[NodeId, EvidenceNode] = field(default_factory=dict)
    claims: dict[NodeId, ClaimNode] = field(default_factory=dict)
    counterpositions: dict[NodeId, CounterpositionNode] = field(default_factory=dict)
    uncertainties: dict[NodeId, UncertaintyNode] = field(default_factory=dict)
    breadth_exponent: float = 1.0

    def collection(self, kind: NodeKind) -> dict[NodeId, AnyNode]:
        return {
            NodeKind.DEFINITION: self.definitions,
            NodeKind.ASSUMPTION: self.assumptions,
            NodeKind.EVIDENCE: self.evidence,
            NodeKind.CLAIM: self.claims,
            NodeKind.COUNTERPOSITION: self.counterpositions,
            NodeKind.UNCERTAINTY: self.uncertainties,
        }[kind]

    def node(self, node_id: NodeId) -> Optional[AnyNode]:
        return self.collection(node_id.kind).get(node_id)

    def strength_bearing_nodes(self) -> dict[NodeId, StrengthBearingNode]:
        out: dict[NodeId, StrengthBearingNode] = {}
        for kind in STRENGTH_BEARING_KINDS:
            out.update(self.collection(kind))  # type: ignore[arg-type]
        return out

    def active_claims(self) -> list[ClaimNode]:
        """Non-retracted claims, in id order."""
        return [
            c for _, c in sorted(self.claims.items())
            if c.status is not NodeStatus.RETRACTED
        ]

    def is_retracted(self, node_id: NodeId) -> bool:
        node = self.node(node_id)
        if node is None:
            return False
        status = getattr(node, "status", None)
        return status is NodeStatus.RETRACTED

    def next_id(self, kind: NodeKind) -> NodeId:
        """Next unused index for a kind. Indices are never reused, so this
        is always one past the maximum ever allocated in this document."""
        existing = self.collection(kind)
        top = max((nid.index for nid in existing), default=0)
        return NodeId(kind, top + 1)

    def with_node(self, node: AnyNode) -> "Belief":
        kind = node.id.kind
        updated = dict(self.collection(kind))
        updated[node.id] = node
        return replace(self, **{_FIELD_BY_KIND[kind]: updated})

    def with_thesis(self, thesis: Thesis) -> "Belief":
        return replace(self, thesis=thesis)


_FIELD_BY_KIND = {
    NodeKind.DEFINITION: "definitions",
    NodeKind.ASSUMPTION: "assumptions",
    NodeKind.EVIDENCE: "evidence",
    NodeKind.CLAIM: "claims",
    NodeKind.COUNTERPOSITION: "counterpositions",
    NodeKind.UNCERTAINTY: "uncertainties",
}


def node_text(node: AnyNode) -> str:
    """Text used for semantic comparison/embedding of a node."""
    if isinstance(node, DefinitionNode):
        return f"{node.term}: {node.definition}"
    if isinstance(node, (AssumptionNode, ClaimNode)):
        return node.statement
    if isinstance(node, EvidenceNode):
        return node.summary
    if isinstance(node, CounterpositionNode):
        return node.statement
    if isinstance(node, UncertaintyNode):
        return node.question
    raise TypeError(f"unsupported node type: {type(node)!r}")


def dependencies_of(belief: Belief, node_id: NodeId) -> tuple[NodeId, ...]:
    """Declared strength dependencies of a node (empty for definitions,
    counterpositions, and uncertainties)."""
    node = belief.node(node_id)
    if isinstance(node, (AssumptionNode, EvidenceNode)):
        return node.supported_by_definitions
    if isinstance(node, ClaimNode):
        return node.depends_on
    return ()


def active_dependencies_of(belief: Belief, node_id: NodeId) -> tuple[NodeId, ...]:
    """Non-retracted declared dependencies of a node."""
    return tuple(
        d for d in dependencies_of(belief, node_id)
        if belief.node(d) is not None and not belief.is_retracted(d)
    )


def support_closure(belief: Belief, node_id: NodeId) -> set[NodeId]:
    """Transitive support set of a node: everything reachable by following
    declared dependencies down toward the foundation tier."""
    seen: set[NodeId] = set()
    frontier = [node_id]
    while frontier:
        current = frontier.pop()
        for dep in dependencies_of(belief, current):
            if dep not in seen and belief.node(dep) is not None:
                seen.add(dep)
                frontier.append(dep)
    return seen

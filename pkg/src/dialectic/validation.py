"""Structural validation of belief documents.

``validate_belief`` returns a complete, deterministic list of violations;
it never raises. Violations carry a stable ``rule`` key so callers (the
patch engine, the CLI, retry prompts) can react programmatically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import (
    AnyNode,
    AssumptionNode,
    Belief,
    ClaimNode,
    CounterpositionNode,
    DefinitionNode,
    EvidenceNode,
    InferenceRole,
    NodeId,
    NodeKind,
    NodeStatus,
    ResponseSufficiency,
    UncertaintyNode,
    UncertaintyStatus,
)
from .taxonomy import ATTACK_TAXONOMY

THESIS_STRENGTH_TOLERANCE = 5e-5

# Rule keys (stable identifiers, referenced by tests and skip reasons).
UNRESOLVED_REFERENCE = "unresolved_reference"
WRONG_REFERENCE_KIND = "wrong_reference_kind"
CLAIM_TO_DEFINITION_DEPENDENCY = "claim_to_definition_dependency"
DEPENDENCY_CYCLE = "dependency_cycle"
CHAIN_ORDERING = "chain_ordering"
CHAIN_TOO_SHORT = "chain_too_short"
CHAIN_STEP_FIELDS = "chain_step_fields"
CONCLUSION_MISMATCH = "conclusion_mismatch"
PREMISE_NOT_IN_DEPENDENCIES = "premise_not_in_dependencies"
MISSING_PREDICTION = "missing_prediction"
PREDICTION_FIELDS = "prediction_fields"
EMPTY_DEPENDENCIES = "empty_dependencies"
EMPTY_SUPPORTED_BY_DEFINITIONS = "empty_supported_by_definitions"
EMPTY_TARGETS = "empty_targets"
EMPTY_SUMMARY_BULLETS = "empty_summary_bullets"
STRENGTH_RANGE = "strength_range"
RETRACTED_NONZERO_STRENGTH = "retracted_nonzero_strength"
MOOT_TARGET_ACTIVE = "moot_target_active"
UNKNOWN_ATTACK_STRATEGY = "unknown_attack_strategy"
STRATEGY_GROUP_MISMATCH = "strategy_group_mismatch"
RESOLUTION_NOTE_REQUIRED = "resolution_note_required"
THESIS_STRENGTH_MISMATCH = "thesis_strength_mismatch"
NEGATIVE_DEFENSE_COUNT = "negative_defense_count"


@dataclass(frozen=True)
class Violation:
    node_id: str
    rule: str
    message: str

    def __str__(self) -> str:
        return f"[{self.rule}] {self.node_id}: {self.message}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def add(self, node_id, rule: str, message: str) -> None:
        self.violations.append(Violation(str(node_id), rule, message))

    def rules(self) -> set[str]:
        return {v.rule for v in self.violations}

    def __str__(self) -> str:
        if self.valid:
            return "valid"
        return "\n".join(str(v) for v in self.violations)


def _check_reference(
    report: ValidationReport,
    belief: Belief,
    owner: NodeId,
    ref: NodeId,
    allowed: tuple[NodeKind, ...],
    label: str,
) -> None:
    if ref.kind not in allowed:
        report.add(owner, WRONG_REFERENCE_KIND,
                   f"{label} {ref} must be one of kinds "
                   f"{'/'.join(k.prefix for k in allowed)}")
        return
    if belief.node(ref) is None:
        report.add(owner, UNRESOLVED_REFERENCE,
                   f"{label} references missing node {ref}")


def _check_strength_node(report: ValidationReport, node: AnyNode) -> None:
    for attr in ("strength", "original_strength"):
        value = getattr(node, attr)
        if not (0.0 <= value <= 1.0):
            report.add(node.id, STRENGTH_RANGE,
                       f"{attr} {value} outside [0, 1]")
    if node.consecutive_defenses < 0:
        report.add(node.id, NEGATIVE_DEFENSE_COUNT,
                   f"consecutive_defenses {node.consecutive_defenses} < 0")
    if node.status is NodeStatus.RETRACTED and node.strength != 0.0:
        report.add(node.id, RETRACTED_NONZERO_STRENGTH,
                   f"retracted node has strength {node.strength}, expected 0")


def _check_definition(report, belief, node: DefinitionNode) -> None:
    _check_strength_node(report, node)
    for ref in node.used_by:
        _check_reference(report, belief, node.id, ref,
                         (NodeKind.ASSUMPTION, NodeKind.EVIDENCE), "used_by")


def _check_support_node(report, belief, node) -> None:
    """Shared rules for assumption and evidence nodes."""
    _check_strength_node(report, node)
    if not node.supported_by_definitions:
        report.add(node.id, EMPTY_SUPPORTED_BY_DEFINITIONS,
                   "supported_by_definitions must list at least one definition")
    for ref in node.supported_by_definitions:
        _check_reference(report, belief, node.id, ref,
                         (NodeKind.DEFINITION,), "supported_by_definitions")
    for ref in node.supports_claims:
        _check_reference(report, belief, node.id, ref,
                         (NodeKind.CLAIM,), "supports_claims")


def _check_claim(report: ValidationReport, belief: Belief, node: ClaimNode) -> None:
    _check_strength_node(report, node)
    if not node.depends_on:
        report.add(node.id, EMPTY_DEPENDENCIES,
                   "depends_on must list at least one dependency")
    for ref in node.depends_on:
        if ref.kind is NodeKind.DEFINITION:
            report.add(node.id, CLAIM_TO_DEFINITION_DEPENDENCY,
                       f"claims may not depend on definitions directly ({ref})")
            continue
        _check_reference(
            report, belief, node.id, ref,
            (NodeKind.ASSUMPTION, NodeKind.EVIDENCE, NodeKind.CLAIM),
            "depends_on",
        )
    _check_inference_chain(report, belief, node)
    if not node.predictions:
        report.add(node.id, MISSING_PREDICTION,
                   "claims require at least one prediction")
    for i, p in enumerate(node.predictions):
        for attr in ("statement", "test", "decision_criterion"):
            if not getattr(p, attr):
                report.add(node.id, PREDICTION_FIELDS,
                           f"predictions[{i}].{attr} must be nonempty")


def _check_inference_chain(report, belief, node: ClaimNode) -> None:
    chain = node.inference_chain
    if len(chain) < 3:
        report.add(node.id, CHAIN_TOO_SHORT,
                   f"inference chain has {len(chain)} steps, needs at least 3")
    roles = [step.role for step in chain]
    premises = roles.count(InferenceRole.PREMISE)
    inferences = roles.count(InferenceRole.INFERENCE)
    conclusions = roles.count(InferenceRole.CONCLUSION)
    well_ordered = (
        premises >= 1 and inferences == 1 and conclusions == 1
        and roles == [InferenceRole.PREMISE] * premises
        + [InferenceRole.INFERENCE, InferenceRole.CONCLUSION]
    )
    if chain and not well_ordered:
        report.add(node.id, CHAIN_ORDERING,
                   "chain must be premises first, then exactly one inference "
                   "step, then exactly one conclusion step last")
    for i, step in enumerate(chain):
        if step.role is InferenceRole.PREMISE:
            if step.reference is None:
                report.add(node.id, CHAIN_STEP_FIELDS,
                           f"premise step {i} must carry exactly one reference")
            else:
                _check_reference(
                    report, belief, node.id, step.reference,
                    (NodeKind.ASSUMPTION, NodeKind.EVIDENCE, NodeKind.CLAIM),
                    f"inference_chain[{i}].reference",
                )
                if step.reference not in node.depends_on:
                    report.add(node.id, PREMISE_NOT_IN_DEPENDENCIES,
                               f"premise reference {step.reference} missing "
                               "from depends_on")
            if step.inference_type is not None:
                report.add(node.id, CHAIN_STEP_FIELDS,
                           f"premise step {i} must not carry an inference_type")
        elif step.role is InferenceRole.INFERENCE:
            if step.inference_type is None:
                report.add(node.id, CHAIN_STEP_FIELDS,
                           f"inference step {i} must carry an inference_type")
            if step.reference is not None:
                report.add(node.id, CHAIN_STEP_FIELDS,
                           f"inference step {i} must not carry a reference")
        else:
            if step.reference is not None or step.inference_type is not None:
                report.add(node.id, CHAIN_STEP_FIELDS,
                           f"conclusion step {i} carries neither reference "
                           "nor inference_type")
            if step.text != node.statement:
                report.add(node.id, CONCLUSION_MISMATCH,
                           "conclusion step text must equal the claim statement")


def _check_counterposition(report, belief, node: CounterpositionNode) -> None:
    if not node.targets:
        report.add(node.id, EMPTY_TARGETS, "targets must be nonempty")
    for ref in node.targets:
        _check_reference(
            report, belief, node.id, ref,
            (NodeKind.DEFINITION, NodeKind.ASSUMPTION,
             NodeKind.EVIDENCE, NodeKind.CLAIM),
            "targets",
        )
    group = ATTACK_TAXONOMY.get(node.attack_strategy)
    if group is None:
        report.add(node.id, UNKNOWN_ATTACK_STRATEGY,
                   f"attack_strategy {node.attack_strategy!r} is not in "
                   "the taxonomy")
    elif group is not node.attack_type:
        report.add(node.id, STRATEGY_GROUP_MISMATCH,
                   f"strategy {node.attack_strategy!r} belongs to "
                   f"{group.value}, not {node.attack_type.value}")
    if node.response_sufficiency is ResponseSufficiency.MOOT:
        active = [str(t) for t in node.targets
                  if belief.node(t) is not None and not belief.is_retracted(t)]
        if active:
            report.add(node.id, MOOT_TARGET_ACTIVE,
                       f"moot requires all targets retracted; active: "
                       f"{', '.join(active)}")


def _check_uncertainty(report, belief, node: UncertaintyNode) -> None:
    if not node.targets:
        report.add(node.id, EMPTY_TARGETS, "targets must be nonempty")
    for ref in node.targets:
        _check_reference(
            report, belief, node.id, ref,
            (NodeKind.DEFINITION, NodeKind.ASSUMPTION,
             NodeKind.EVIDENCE, NodeKind.CLAIM),
            "targets",
        )
    if node.status is UncertaintyStatus.RESOLVED and not node.resolution_note:
        report.add(node.id, RESOLUTION_NOTE_REQUIRED,
                   "resolution_note is required when status is resolved")


def _check_claim_cycles(report: ValidationReport, belief: Belief) -> None:
    edges = {
        cid: [d for d in claim.depends_on if d.kind is NodeKind.CLAIM]
        for cid, claim in belief.claims.items()
    }
    WHITE, GREY, BLACK = 0, 1, 2
    color = {cid: WHITE for cid in edges}
    cycles: list[tuple[NodeId, ...]] = []

    def visit(cid: NodeId, stack: list[NodeId]) -> None:
        color[cid] = GREY
        stack.append(cid)
        for nxt in edges.get(cid, []):
            if nxt not in color:
                continue
            if color[nxt] == GREY:
                cycles.append(tuple(stack[stack.index(nxt):]) + (nxt,))
            elif color[nxt] == WHITE:
                visit(nxt, stack)
        stack.pop()
        color[cid] = BLACK

    for cid in sorted(edges):
        if color[cid] == WHITE:
            visit(cid, [])
    for cycle in cycles:
        report.add(cycle[0], DEPENDENCY_CYCLE,
                   "claim dependency cycle: " + " -> ".join(map(str, cycle)))


def _check_thesis(report: ValidationReport, belief: Belief) -> None:
    thesis = belief.thesis
    if not thesis.summary_bullets:
        report.add("thesis", EMPTY_SUMMARY_BULLETS,
                   "summary_bullets must be nonempty")
    if not (0.0 <= thesis.strength <= 1.0):
        report.add("thesis", STRENGTH_RANGE,
                   f"strength {thesis.strength} outside [0, 1]")
        return
    active = [c.strength for c in belief.active_claims()]
    if active:
        n = len(active)
        p = belief.breadth_exponent
        expected = (sum(active) / n) * (n**p / (n**p + 1.0))
    else:
        expected = 0.0
    if abs(thesis.strength - expected) > THESIS_STRENGTH_TOLERANCE:
        report.add("thesis", THESIS_STRENGTH_MISMATCH,
                   f"strength {thesis.strength} does not match the formula "
                   f"value {expected:.6f} over {len(active)} active claims")


def validate_belief(belief: Belief) -> ValidationReport:
    report = ValidationReport()
    for node in sorted(belief.definitions.values(), key=lambda x: x.id):
        _check_definition(report, belief, node)
    for node in sorted(belief.assumptions.values(), key=lambda x: x.id):
        _check_support_node(report, belief, node)
    for node in sorted(belief.evidence.values(), key=lambda x: x.id):
        _check_support_node(report, belief, node)
    for node in sorted(belief.claims.values(), key=lambda x: x.id):
        _check_claim(report, belief, node)
    for node in sorted(belief.counterpositions.values(), key=lambda x: x.id):
        _check_counterposition(report, belief, node)
    for node in sorted(belief.uncertainties.values(), key=lambda x: x.id):
        _check_uncertainty(report, belief, node)
    _check_claim_cycles(report, belief)
    _check_thesis(report, belief)
    return report


def validate_node(belief: Belief, node: AnyNode) -> ValidationReport:
    """Node-level validation in isolation (used by the patch engine to
    vet ``add`` payloads against the intermediate belief state)."""
    report = ValidationReport()
    staged = belief.with_node(node)
    if isinstance(node, DefinitionNode):
        _check_definition(report, staged, node)
    elif isinstance(node, AssumptionNode):
        _check_support_node(report, staged, node)
    elif isinstance(node, EvidenceNode):
        _check_support_node(report, staged, node)
    elif isinstance(node, ClaimNode):
        _check_claim(report, staged, node)
        _check_claim_cycles(report, staged)
    elif isinstance(node, CounterpositionNode):
        _check_counterposition(report, staged, node)
    elif isinstance(node, UncertaintyNode):
        _check_uncertainty(report, staged, node)
    return report

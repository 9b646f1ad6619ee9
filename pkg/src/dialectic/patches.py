"""The patch engine — the sole mutation path for beliefs.

Patches are atomic: an invalid patch is skipped whole (with a reason), and
if the batch leaves the belief structurally invalid the entire batch rolls
back. Phase-2 batches additionally strip unilateral strength increases on
existing nodes.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Optional

from .model import (
    Belief,
    NodeId,
    NodeKind,
    NodeStatus,
    ResponseSufficiency,
    round_strength,
)
from .serialize import BeliefParseError, _PARSERS, _node_to_dict
from .strength import ChangeLog, StrengthParams, enforce_constraints
from .validation import validate_belief, validate_node

_KIND_KEY = {
    NodeKind.DEFINITION: "definitions",
    NodeKind.ASSUMPTION: "assumptions",
    NodeKind.EVIDENCE: "evidence",
    NodeKind.CLAIM: "claims",
    NodeKind.COUNTERPOSITION: "counterpositions",
    NodeKind.UNCERTAINTY: "uncertainties",
}

# Fields an update may touch, per kind (id is never updatable).
_UPDATABLE_FIELDS = {
    NodeKind.DEFINITION: {
        "term", "definition", "strength", "strength_justification", "status",
        "original_strength", "consecutive_defenses",
    },
    NodeKind.ASSUMPTION: {
        "type", "statement", "supports_claims", "supported_by_definitions",
        "strength", "strength_justification", "status", "original_strength",
        "consecutive_defenses",
    },
    NodeKind.EVIDENCE: {
        "type", "summary", "source", "supports_claims",
        "supported_by_definitions", "strength", "strength_justification",
        "status", "original_strength", "consecutive_defenses",
    },
    NodeKind.CLAIM: {
        "type", "statement", "depends_on", "strength",
        "strength_justification", "status", "inference_chain", "predictions",
        "original_strength", "consecutive_defenses",
    },
    NodeKind.COUNTERPOSITION: {
        "targets", "attack_type", "attack_strategy", "statement",
        "my_response", "response_sufficiency",
    },
    NodeKind.UNCERTAINTY: {
        "targets", "question", "importance", "status", "resolution_note",
    },
}


class PatchOp(str, Enum):
    ADD = "add"
    UPDATE = "update"


@dataclass(frozen=True)
class Patch:
    op: PatchOp
    target_kind: NodeKind
    payload: dict[str, Any]
    node_id: Optional[NodeId] = None

    def to_dict(self) -> dict:
        out = {
            "op": self.op.value,
            "target_kind": self.target_kind.value,
            "payload": self.payload,
        }
        if self.node_id is not None:
            out["node_id"] = str(self.node_id)
        return out

    @staticmethod
    def from_dict(doc: dict) -> "Patch":
        node_id = None
        if doc.get("node_id"):
            node_id = NodeId.parse(doc["node_id"])
        return Patch(
            op=PatchOp(doc["op"]),
            target_kind=NodeKind(doc["target_kind"]),
            payload=dict(doc.get("payload", {})),
            node_id=node_id,
        )


@dataclass
class PatchBatchResult:
    belief_out: Belief
    applied: list[int] = field(default_factory=list)
    skipped: list[tuple[int, str]] = field(default_factory=list)
    rolled_back: bool = False
    changelog: ChangeLog = field(default_factory=ChangeLog)

    def dispositions(self) -> list[dict]:
        out: list[dict] = []
        skip_reasons = dict(self.skipped)
        total = len(self.applied) + len(self.skipped)
        for i in range(total):
            if i in skip_reasons:
                out.append({"index": i, "status": "skipped",
                            "reason": skip_reasons[i]})
            else:
                out.append({"index": i, "status": "applied"})
        return out


def mark_moot_counterpositions(belief: Belief) -> tuple[Belief, list[NodeId]]:
    """Set sufficiency to moot on every counterposition all of whose
    targets are retracted; moot is terminal and never unset."""
    changed: list[NodeId] = []
    for nid, x in sorted(belief.counterpositions.items()):
        if x.response_sufficiency is ResponseSufficiency.MOOT:
            continue
        if x.targets and all(
            belief.node(t) is not None and belief.is_retracted(t)
            for t in x.targets
        ):
            belief = belief.with_node(
                replace(x, response_sufficiency=ResponseSufficiency.MOOT)
            )
            changed.append(nid)
    return belief, changed


def _apply_add(belief: Belief, patch: Patch, log: ChangeLog
               ) -> tuple[Belief, Optional[str]]:
    nid = belief.next_id(patch.target_kind)
    payload = dict(patch.payload)
    payload.pop("id", None)
    # New strength-bearing nodes start their defense bookkeeping fresh.
    if patch.target_kind not in (NodeKind.COUNTERPOSITION, NodeKind.UNCERTAINTY):
        if "strength" in payload:
            payload["strength"] = round_strength(payload["strength"])
        payload.setdefault("original_strength", payload.get("strength", 0.0))
        payload.setdefault("consecutive_defenses", 0)
    try:
        node = _PARSERS[_KIND_KEY[patch.target_kind]](nid, payload)
    except (BeliefParseError, TypeError, ValueError) as exc:
        return belief, f"malformed payload: {exc}"
    report = validate_node(belief, node)
    if not report.valid:
        return belief, "; ".join(str(v) for v in report.violations)
    log.add(nid, 0.0, getattr(node, "strength", 0.0), "patch_add")
    return belief.with_node(node), None


def _apply_update(belief: Belief, patch: Patch, strength_filter: bool,
                  log: ChangeLog) -> tuple[Belief, Optional[str]]:
    if patch.node_id is None:
        return belief, "update requires a node_id"
    nid = patch.node_id
    if nid.kind is not patch.target_kind:
        return belief, f"node_id {nid} does not match target_kind"
    current = belief.node(nid)
    if current is None:
        return belief, f"unresolved_reference: no node {nid}"
    payload = dict(patch.payload)
    payload.pop("id", None)
    allowed = _UPDATABLE_FIELDS[patch.target_kind]
    unknown = sorted(set(payload) - allowed)
    if unknown:
        return belief, f"unknown fields for {patch.target_kind.value}: " \
                       f"{', '.join(unknown)}"
    if getattr(current, "status", None) is NodeStatus.RETRACTED:
        return belief, f"{nid} is retracted; retraction is irreversible"
    if (nid.kind is NodeKind.COUNTERPOSITION
            and current.response_sufficiency is ResponseSufficiency.MOOT
            and payload.get("response_sufficiency") not in (None, "moot")):
        return belief, f"{nid} is moot; moot is terminal"
    if strength_filter and "strength" in payload:
        if float(payload["strength"]) > current.strength:
            payload.pop("strength")
            if not payload:
                return belief, "strength increase stripped by phase-2 filter"
    if "strength" in payload:
        payload["strength"] = round_strength(payload["strength"])
    if payload.get("status") == "retracted":
        payload["strength"] = 0.0
    merged = {**_node_to_dict(current), **payload}
    try:
        node = _PARSERS[_KIND_KEY[patch.target_kind]](nid, merged)
    except (BeliefParseError, TypeError, ValueError) as exc:
        return belief, f"malformed payload: {exc}"
    report = validate_node(belief, node)
    if not report.valid:
        return belief, "; ".join(str(v) for v in report.violations)
    old_s = getattr(current, "strength", None)
    new_s = getattr(node, "strength", None)
    if old_s is not None and new_s is not None and old_s != new_s:
        log.add(nid, old_s, new_s, "patch_update")
    return belief.with_node(node), None


def apply_patches(belief: Belief, patches: list[Patch],
                  phase2_strength_filter: bool,
                  params: StrengthParams) -> PatchBatchResult:
    """Apply patches in order against the evolving intermediate state,
    then auto-moot counterpositions, re-enforce the dependency ceilings,
    and recompute the thesis. Rolls the whole batch back if the end state
    fails validation."""
    belief_in = belief
    log = ChangeLog()
    applied: list[int] = []
    skipped: list[tuple[int, str]] = []
    for i, patch in enumerate(patches):
        if patch.op is PatchOp.ADD:
            belief, reason = _apply_add(belief, patch, log)
        else:
            belief, reason = _apply_update(
                belief, patch, phase2_strength_filter, log)
        if reason is None:
            applied.append(i)
        else:
            skipped.append((i, reason))
    belief, _ = mark_moot_counterpositions(belief)
    belief, enf_log = enforce_constraints(belief, params)
    log.extend(enf_log)
    report = validate_belief(belief)
    if not report.valid:
        return PatchBatchResult(
            belief_out=belief_in,
            applied=[],
            skipped=[(i, "batch rolled back: " + "; ".join(
                str(v) for v in report.violations)) for i in range(len(patches))],
            rolled_back=True,
            changelog=ChangeLog(),
        )
    return PatchBatchResult(
        belief_out=belief,
        applied=applied,
        skipped=skipped,
        rolled_back=False,
        changelog=log,
    )

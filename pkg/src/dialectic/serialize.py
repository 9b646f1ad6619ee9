"""JSON (de)serialization of belief documents.

The on-disk layout uses lower-snake field names, identifier-keyed node
maps, and a required ``"cbs_version": "1"`` marker at the document root.
``used_by`` on definitions is derived from assumption/evidence nodes and
rewritten on every save; mismatches found while parsing are repaired and
reported as warnings, never as hard errors.
"""

from __future__ import annotations

import json
from dataclasses import replace
from pathlib import Path
from typing import Any

from .model import (
    AssumptionNode,
    AssumptionType,
    AttackType,
    Belief,
    ClaimNode,
    CounterpositionNode,
    DefinitionNode,
    EvidenceNode,
    EvidenceType,
    Importance,
    InferenceRole,
    InferenceStep,
    InferenceType,
    NodeId,
    NodeStatus,
    Prediction,
    ResponseSufficiency,
    Thesis,
    UncertaintyNode,
    UncertaintyStatus,
)

CBS_VERSION = "1"


class BeliefParseError(ValueError):
    """Raised when a document cannot be decoded into a belief at all.

    Schema-level problems that can be expressed as violations are left to
    the validator; this error covers structural failures (missing version,
    malformed ids, wrong JSON types)."""


def _ids(values: Any, context: str) -> tuple[NodeId, ...]:
    if not isinstance(values, list):
        raise BeliefParseError(f"{context}: expected a list of node ids")
    out = []
    for v in values:
        nid = NodeId.try_parse(v) if isinstance(v, str) else None
        if nid is None:
            raise BeliefParseError(f"{context}: malformed node id {v!r}")
        out.append(nid)
    return tuple(out)


def _enum(cls, value, context):
    try:
        return cls(value)
    except ValueError:
        raise BeliefParseError(
            f"{context}: {value!r} is not one of "
            f"{[m.value for m in cls]}"
        ) from None


def _definition(nid: NodeId, d: dict) -> DefinitionNode:
    return DefinitionNode(
        id=nid,
        term=d.get("term", ""),
        definition=d.get("definition", ""),
        strength=float(d.get("strength", 0.0)),
        strength_justification=d.get("strength_justification", ""),
        status=_enum(NodeStatus, d.get("status", "active"), str(nid)),
        used_by=_ids(d.get("used_by", []), f"{nid}.used_by"),
        original_strength=float(d.get("original_strength", d.get("strength", 0.0))),
        consecutive_defenses=int(d.get("consecutive_defenses", 0)),
    )


def _assumption(nid: NodeId, d: dict) -> AssumptionNode:
    return AssumptionNode(
        id=nid,
        type=_enum(AssumptionType, d.get("type", "foundational"), str(nid)),
        statement=d.get("statement", ""),
        supports_claims=_ids(d.get("supports_claims", []), f"{nid}.supports_claims"),
        supported_by_definitions=_ids(
            d.get("supported_by_definitions", []), f"{nid}.supported_by_definitions"
        ),
        strength=float(d.get("strength", 0.0)),
        strength_justification=d.get("strength_justification", ""),
        status=_enum(NodeStatus, d.get("status", "active"), str(nid)),
        original_strength=float(d.get("original_strength", d.get("strength", 0.0))),
        consecutive_defenses=int(d.get("consecutive_defenses", 0)),
    )


def _evidence(nid: NodeId, d: dict) -> EvidenceNode:
    return EvidenceNode(
        id=nid,
        type=_enum(EvidenceType, d.get("type", "empirical"), str(nid)),
        summary=d.get("summary", ""),
        source=d.get("source", ""),
        supports_claims=_ids(d.get("supports_claims", []), f"{nid}.supports_claims"),
        supported_by_definitions=_ids(
            d.get("supported_by_definitions", []), f"{nid}.supported_by_definitions"
        ),
        strength=float(d.get("strength", 0.0)),
        strength_justification=d.get("strength_justification", ""),
        status=_enum(NodeStatus, d.get("status", "active"), str(nid)),
        original_strength=float(d.get("original_strength", d.get("strength", 0.0))),
        consecutive_defenses=int(d.get("consecutive_defenses", 0)),
    )


def _inference_step(d: dict, context: str) -> InferenceStep:
    role = _enum(InferenceRole, d.get("role"), context)
    reference = None
    if "reference" in d and d["reference"] is not None:
        ref = NodeId.try_parse(d["reference"])
        if ref is None:
            raise BeliefParseError(f"{context}: malformed reference {d['reference']!r}")
        reference = ref
    itype = None
    if "inference_type" in d and d["inference_type"] is not None:
        itype = _enum(InferenceType, d["inference_type"], context)
    return InferenceStep(role=role, text=d.get("text", ""), reference=reference,
                         inference_type=itype)


def _prediction(d: dict) -> Prediction:
    return Prediction(
        statement=d.get("statement", ""),
        test=d.get("test", ""),
        decision_criterion=d.get("decision_criterion", ""),
        potential_falsifiers=tuple(d.get("potential_falsifiers", []) or []),
    )


def _claim(nid: NodeId, d: dict) -> ClaimNode:
    return ClaimNode(
        id=nid,
        type=d.get("type", ""),
        statement=d.get("statement", ""),
        depends_on=_ids(d.get("depends_on", []), f"{nid}.depends_on"),
        strength=float(d.get("strength", 0.0)),
        strength_justification=d.get("strength_justification", ""),
        status=_enum(NodeStatus, d.get("status", "active"), str(nid)),
        inference_chain=tuple(
            _inference_step(s, f"{nid}.inference_chain[{i}]")
            for i, s in enumerate(d.get("inference_chain", []))
        ),
        predictions=tuple(_prediction(p) for p in d.get("predictions", [])),
        original_strength=float(d.get("original_strength", d.get("strength", 0.0))),
        consecutive_defenses=int(d.get("consecutive_defenses", 0)),
    )


def _counterposition(nid: NodeId, d: dict) -> CounterpositionNode:
    return CounterpositionNode(
        id=nid,
        targets=_ids(d.get("targets", []), f"{nid}.targets"),
        attack_type=_enum(AttackType, d.get("attack_type"), str(nid)),
        attack_strategy=d.get("attack_strategy", ""),
        statement=d.get("statement", ""),
        my_response=d.get("my_response", ""),
        response_sufficiency=_enum(
            ResponseSufficiency, d.get("response_sufficiency"), str(nid)
        ),
    )


def _uncertainty(nid: NodeId, d: dict) -> UncertaintyNode:
    return UncertaintyNode(
        id=nid,
        targets=_ids(d.get("targets", []), f"{nid}.targets"),
        question=d.get("question", ""),
        importance=_enum(Importance, d.get("importance", "medium"), str(nid)),
        status=_enum(UncertaintyStatus, d.get("status", "active"), str(nid)),
        resolution_note=d.get("resolution_note", ""),
    )


_PARSERS = {
    "definitions": _definition,
    "assumptions": _assumption,
    "evidence": _evidence,
    "claims": _claim,
    "counterpositions": _counterposition,
    "uncertainties": _uncertainty,
}


def belief_from_dict(doc: dict) -> Belief:
    if not isinstance(doc, dict):
        raise BeliefParseError("belief document must be a JSON object")
    if doc.get("cbs_version") != CBS_VERSION:
        raise BeliefParseError(
            f'belief document requires "cbs_version": "{CBS_VERSION}"'
        )
    thesis_doc = doc.get("thesis")
    if not isinstance(thesis_doc, dict):
        raise BeliefParseError("missing thesis object")
    thesis = Thesis(
        stance=thesis_doc.get("stance", ""),
        summary_bullets=tuple(thesis_doc.get("summary_bullets", [])),
        strength=float(thesis_doc.get("strength", 0.0)),
        strength_reasoning=thesis_doc.get("strength_reasoning", ""),
    )
    collections: dict[str, dict] = {}
    for key, parser in _PARSERS.items():
        raw = doc.get(key, {})
        if not isinstance(raw, dict):
            raise BeliefParseError(f"{key} must be an id-keyed object")
        parsed = {}
        for id_text, node_doc in raw.items():
            nid = NodeId.try_parse(id_text)
            if nid is None:
                raise BeliefParseError(f"malformed node id key {id_text!r} in {key}")
            if not isinstance(node_doc, dict):
                raise BeliefParseError(f"{id_text}: node body must be an object")
            parsed[nid] = parser(nid, node_doc)
        collections[key] = parsed
    belief = Belief(
        thesis=thesis,
        breadth_exponent=float(doc.get("breadth_exponent", 1.0)),
        **collections,
    )
    return repair_used_by(belief)[0]


def repair_used_by(belief: Belief) -> tuple[Belief, list[str]]:
    """Rewrite each definition's used_by from the authoritative
    supported_by_definitions lists on assumption/evidence nodes."""
    derived: dict[NodeId, list[NodeId]] = {d: [] for d in belief.definitions}
    for node in list(belief.assumptions.values()) + list(belief.evidence.values()):
        for d in node.supported_by_definitions:
            if d in derived:
                derived[d].append(node.id)
    warnings = []
    definitions = {}
    for nid, node in belief.definitions.items():
        expected = tuple(sorted(derived[nid]))
        if tuple(sorted(node.used_by)) != expected:
            warnings.append(
                f"{nid}: used_by rewritten from derived references"
            )
            node = replace(node, used_by=expected)
        else:
            node = replace(node, used_by=expected)
        definitions[nid] = node
    return replace(belief, definitions=definitions), warnings


def _strength_fields(node) -> dict:
    return {
        "strength": node.strength,
        "strength_justification": node.strength_justification,
        "status": node.status.value,
        "original_strength": node.original_strength,
        "consecutive_defenses": node.consecutive_defenses,
    }


def _node_to_dict(node) -> dict:
    if isinstance(node, DefinitionNode):
        return {
            "term": node.term,
            "definition": node.definition,
            **_strength_fields(node),
            "used_by": [str(i) for i in node.used_by],
        }
    if isinstance(node, AssumptionNode):
        return {
            "type": node.type.value,
            "statement": node.statement,
            "supports_claims": [str(i) for i in node.supports_claims],
            "supported_by_definitions": [str(i) for i in node.supported_by_definitions],
            **_strength_fields(node),
        }
    if isinstance(node, EvidenceNode):
        return {
            "type": node.type.value,
            "summary": node.summary,
            "source": node.source,
            "supports_claims": [str(i) for i in node.supports_claims],
            "supported_by_definitions": [str(i) for i in node.supported_by_definitions],
            **_strength_fields(node),
        }
    if isinstance(node, ClaimNode):
        chain = []
        for step in node.inference_chain:
            entry: dict = {"role": step.role.value, "text": step.text}
            if step.reference is not None:
                entry["reference"] = str(step.reference)
            if step.inference_type is not None:
                entry["inference_type"] = step.inference_type.value
            chain.append(entry)
        preds = []
        for p in node.predictions:
            entry = {
                "statement": p.statement,
                "test": p.test,
                "decision_criterion": p.decision_criterion,
            }
            if p.potential_falsifiers:
                entry["potential_falsifiers"] = list(p.potential_falsifiers)
            preds.append(entry)
        return {
            "type": node.type,
            "statement": node.statement,
            "depends_on": [str(i) for i in node.depends_on],
            **_strength_fields(node),
            "inference_chain": chain,
            "predictions": preds,
        }
    if isinstance(node, CounterpositionNode):
        return {
            "targets": [str(i) for i in node.targets],
            "attack_type": node.attack_type.value,
            "attack_strategy": node.attack_strategy,
            "statement": node.statement,
            "my_response": node.my_response,
            "response_sufficiency": node.response_sufficiency.value,
        }
    if isinstance(node, UncertaintyNode):
        out = {
            "targets": [str(i) for i in node.targets],
            "question": node.question,
            "importance": node.importance.value,
            "status": node.status.value,
        }
        if node.resolution_note:
            out["resolution_note"] = node.resolution_note
        return out
    raise TypeError(f"unsupported node type: {type(node)!r}")


def belief_to_dict(belief: Belief) -> dict:
    belief, _ = repair_used_by(belief)
    doc: dict = {
        "cbs_version": CBS_VERSION,
        "thesis": {
            "stance": belief.thesis.stance,
            "summary_bullets": list(belief.thesis.summary_bullets),
            "strength": belief.thesis.strength,
            "strength_reasoning": belief.thesis.strength_reasoning,
        },
        "breadth_exponent": belief.breadth_exponent,
    }
    for key, attr in (
        ("definitions", belief.definitions),
        ("assumptions", belief.assumptions),
        ("evidence", belief.evidence),
        ("claims", belief.claims),
        ("counterpositions", belief.counterpositions),
        ("uncertainties", belief.uncertainties),
    ):
        doc[key] = {
            str(nid): _node_to_dict(node) for nid, node in sorted(attr.items())
        }
    return doc


def dumps_belief(belief: Belief) -> str:
    return json.dumps(belief_to_dict(belief), indent=2, sort_keys=False)


def loads_belief(text: str) -> Belief:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BeliefParseError(f"invalid JSON: {exc}") from exc
    return belief_from_dict(doc)


def load_belief(path: str | Path) -> Belief:
    return loads_belief(Path(path).read_text())


def save_belief(belief: Belief, path: str | Path) -> None:
    Path(path).write_text(dumps_belief(belief) + "\n")

"""Patch application, phase-2 filtering, rollback, and moot semantics."""

from __future__ import annotations

import pytest

from dialectic.model import NodeId, NodeKind
from dialectic.patches import (
    Patch,
    PatchOp,
    apply_patches,
    mark_moot_counterpositions,
)
from dialectic.strength import StrengthParams

PARAMS = StrengthParams()


def update(nid: str, **payload) -> Patch:
    node_id = NodeId.parse(nid)
    return Patch(op=PatchOp.UPDATE, target_kind=node_id.kind,
                 payload=payload, node_id=node_id)


class TestAdd:
    def test_add_evidence_assigns_next_id(self, initial_belief):
        patch = Patch(op=PatchOp.ADD, target_kind=NodeKind.EVIDENCE, payload={
            "type": "empirical",
            "summary": "Replication attempt with preregistered protocol.",
            "source": "Registered Reports, 2019",
            "supports_claims": ["C1"],
            "supported_by_definitions": ["D2"],
            "strength": 0.6123456,
            "strength_justification": "pre-registered but single site",
            "status": "active",
        })
        result = apply_patches(initial_belief, [patch], False, PARAMS)
        assert result.applied == [0] and not result.rolled_back
        node = result.belief_out.node(NodeId.parse("E5"))
        assert node.strength == 0.6123  # rounded to the 4-decimal grid
        assert node.original_strength == 0.6123
        assert node.consecutive_defenses == 0

    def test_add_uncertainty(self, initial_belief):
        patch = Patch(op=PatchOp.ADD, target_kind=NodeKind.UNCERTAINTY, payload={
            "targets": ["C2"],
            "question": "Does the criterion generalize outside the lab?",
            "importance": "medium",
            "status": "active",
        })
        result = apply_patches(initial_belief, [patch], False, PARAMS)
        assert result.applied == [0]
        assert NodeId.parse("U4") in result.belief_out.uncertainties

    def test_malformed_add_is_skipped(self, initial_belief):
        patch = Patch(op=PatchOp.ADD, target_kind=NodeKind.EVIDENCE,
                      payload={"summary": "missing everything"})
        result = apply_patches(initial_belief, [patch], False, PARAMS)
        assert result.applied == []
        assert result.skipped[0][0] == 0
        assert not result.rolled_back


class TestUpdate:
    def test_weaken_claim(self, initial_belief):
        result = apply_patches(
            initial_belief, [update("C1", strength=0.55)], False, PARAMS)
        assert result.belief_out.node(NodeId.parse("C1")).strength == 0.55
        # thesis recomputed: mean(0.55, 0.7, 0.6) * 3/4
        assert result.belief_out.thesis.strength == pytest.approx(0.4625)

    def test_update_requires_node_id(self, initial_belief):
        patch = Patch(op=PatchOp.UPDATE, target_kind=NodeKind.CLAIM,
                      payload={"strength": 0.1})
        result = apply_patches(initial_belief, [patch], False, PARAMS)
        assert result.skipped and "node_id" in result.skipped[0][1]

    def test_kind_mismatch_is_skipped(self, initial_belief):
        patch = Patch(op=PatchOp.UPDATE, target_kind=NodeKind.EVIDENCE,
                      payload={"strength": 0.1}, node_id=NodeId.parse("C1"))
        result = apply_patches(initial_belief, [patch], False, PARAMS)
        assert result.applied == []

    def test_unknown_field_is_skipped(self, initial_belief):
        result = apply_patches(
            initial_belief, [update("C1", flavor="spicy")], False, PARAMS)
        assert result.skipped and "unknown fields" in result.skipped[0][1]

    def test_retraction_zeroes_strength(self, initial_belief):
        result = apply_patches(
            initial_belief, [update("C3", status="retracted")], False, PARAMS)
        node = result.belief_out.node(NodeId.parse("C3"))
        assert node.strength == 0.0
        # Two active claims remain: mean(0.7, 0.7) * 2/3
        assert result.belief_out.thesis.strength == pytest.approx(0.4667)

    def test_retraction_is_irreversible(self, final_belief):
        result = apply_patches(
            final_belief, [update("C1", status="active", strength=0.5)],
            False, PARAMS)
        assert result.applied == []
        assert "irreversible" in result.skipped[0][1]


class TestPhase2Filter:
    def test_strength_increase_stripped(self, initial_belief):
        result = apply_patches(
            initial_belief, [update("C1", strength=0.95)], True, PARAMS)
        assert result.applied == []
        assert "phase-2 filter" in result.skipped[0][1]
        assert result.belief_out.node(NodeId.parse("C1")).strength == 0.7

    def test_increase_stripped_but_rest_applied(self, initial_belief):
        result = apply_patches(
            initial_belief,
            [update("C1", strength=0.95, strength_justification="revised")],
            True, PARAMS)
        assert result.applied == [0]
        node = result.belief_out.node(NodeId.parse("C1"))
        assert node.strength == 0.7
        assert node.strength_justification == "revised"

    def test_decreases_pass_through(self, initial_belief):
        result = apply_patches(
            initial_belief, [update("C1", strength=0.5)], True, PARAMS)
        assert result.applied == [0]
        assert result.belief_out.node(NodeId.parse("C1")).strength == 0.5

    def test_phase1_allows_increases(self, initial_belief):
        result = apply_patches(
            initial_belief, [update("E1", strength=0.72)], False, PARAMS)
        assert result.applied == [0]
        assert result.belief_out.node(NodeId.parse("E1")).strength == 0.72


class TestMoot:
    def test_auto_moot_when_all_targets_retracted(self, initial_belief):
        # X1 targets C1; retracting C1 must flip X1 to moot automatically.
        result = apply_patches(
            initial_belief, [update("C1", status="retracted")], False, PARAMS)
        x1 = result.belief_out.node(NodeId.parse("X1"))
        assert x1.response_sufficiency.value == "moot"

    def test_moot_is_terminal(self, final_belief):
        result = apply_patches(
            final_belief, [update("X1", response_sufficiency="partial")],
            False, PARAMS)
        assert result.applied == []
        assert "moot is terminal" in result.skipped[0][1]

    def test_mark_moot_reports_changed_ids(self, initial_belief):
        import dataclasses
        from dialectic.model import NodeStatus
        c1 = initial_belief.node(NodeId.parse("C1"))
        belief = initial_belief.with_node(
            dataclasses.replace(c1, status=NodeStatus.RETRACTED, strength=0.0))
        _, changed = mark_moot_counterpositions(belief)
        assert NodeId.parse("X1") in changed


class TestRollback:
    def test_invalid_end_state_rolls_back_whole_batch(self, initial_belief):
        # Retracting D1 orphans nothing structurally, but an update that
        # leaves the thesis claiming a dangling dependency must roll back.
        patches = [
            update("C1", strength=0.4),
            Patch(op=PatchOp.ADD, target_kind=NodeKind.CLAIM, payload={
                "type": "empirical",
                "statement": "Dangling dependent claim.",
                "depends_on": ["E77"],
                "strength": 0.5,
                "strength_justification": "bad",
                "status": "active",
                "inference_chain": [],
                "predictions": [],
            }),
        ]
        result = apply_patches(initial_belief, patches, False, PARAMS)
        if result.rolled_back:
            assert result.applied == []
            assert result.belief_out is initial_belief
            assert all("batch rolled back" in r for _, r in result.skipped)
        else:
            # The malformed add was skipped at patch level instead; either
            # way the bad node must not survive.
            assert NodeId.parse("C4") not in result.belief_out.claims

    def test_dispositions_cover_every_patch(self, initial_belief):
        patches = [update("C1", strength=0.55),
                   update("C9", strength=0.1)]
        result = apply_patches(initial_belief, patches, False, PARAMS)
        dispositions = result.dispositions()
        assert len(dispositions) == 2
        assert dispositions[0]["status"] == "applied"
        assert dispositions[1]["status"] == "skipped"
        assert dispositions[1]["reason"]


class TestSerialization:
    def test_patch_roundtrip(self):
        patch = update("C1", strength=0.5)
        assert Patch.from_dict(patch.to_dict()) == patch

    def test_add_roundtrip(self):
        patch = Patch(op=PatchOp.ADD, target_kind=NodeKind.UNCERTAINTY,
                      payload={"targets": ["C1"], "question": "q?",
                               "importance": "low", "status": "active"})
        assert Patch.from_dict(patch.to_dict()) == patch

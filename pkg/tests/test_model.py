"""Unit tests for the belief document model."""

from __future__ import annotations

import dataclasses

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dialectic.model import (
    Belief,
    NodeId,
    NodeKind,
    NodeStatus,
    active_dependencies_of,
    dependencies_of,
    node_text,
    round_strength,
    support_closure,
)


class TestNodeId:
    def test_parse_and_str(self):
        nid = NodeId.parse("D12")
        assert nid.kind is NodeKind.DEFINITION
        assert nid.index == 12
        assert str(nid) == "D12"

    @pytest.mark.parametrize("raw", ["", "D", "Z1", "D0", "Dx", "1D", "d1"])
    def test_parse_rejects_bad_ids(self, raw):
        with pytest.raises(ValueError):
            NodeId.parse(raw)
        assert NodeId.try_parse(raw) is None

    def test_ordering_is_kind_then_numeric_index(self):
        ids = [NodeId.parse(s) for s in ["E2", "D10", "C1", "D2", "A1"]]
        assert [str(n) for n in sorted(ids)] == ["A1", "C1", "D2", "D10", "E2"]

    @given(st.sampled_from("DAECXU"), st.integers(min_value=1, max_value=999))
    def test_roundtrip(self, letter, index):
        raw = f"{letter}{index}"
        assert str(NodeId.parse(raw)) == raw


class TestRoundStrength:
    @given(st.floats(min_value=0.0, max_value=1.0))
    def test_rounds_to_four_decimals(self, value):
        rounded = round_strength(value)
        assert rounded == round(value, 4)

    def test_exact_values_survive(self):
        assert round_strength(0.3675) == 0.3675


class TestBeliefAccessors:
    def test_collections_are_keyed_by_kind(self, initial_belief):
        assert set(initial_belief.collection(NodeKind.CLAIM)) == {
            NodeId.parse("C1"), NodeId.parse("C2"), NodeId.parse("C3")}

    def test_node_lookup(self, initial_belief):
        node = initial_belief.node(NodeId.parse("E2"))
        assert node.strength == 0.75

    def test_missing_node_is_none(self, initial_belief):
        assert initial_belief.node(NodeId.parse("C99")) is None

    def test_active_claims_excludes_retracted(self, final_belief):
        active = [str(c.id) for c in final_belief.active_claims()]
        assert active == ["C2", "C4", "C5"]

    def test_strength_bearing_nodes_cover_four_kinds(self, initial_belief):
        kinds = {nid.kind for nid in initial_belief.strength_bearing_nodes()}
        assert kinds == {NodeKind.DEFINITION, NodeKind.ASSUMPTION,
                         NodeKind.EVIDENCE, NodeKind.CLAIM}

    def test_next_id_skips_existing(self, initial_belief):
        assert str(initial_belief.next_id(NodeKind.CLAIM)) == "C4"
        assert str(initial_belief.next_id(NodeKind.UNCERTAINTY)) == "U4"

    def test_with_node_is_persistent(self, initial_belief):
        node = initial_belief.node(NodeId.parse("C1"))
        updated = dataclasses.replace(node, strength=0.25)
        out = initial_belief.with_node(updated)
        assert out.node(node.id).strength == 0.25
        assert initial_belief.node(node.id).strength == 0.7

    def test_belief_is_frozen(self, initial_belief):
        with pytest.raises(dataclasses.FrozenInstanceError):
            initial_belief.thesis = None


class TestGraphHelpers:
    def test_dependencies_of_claim(self, initial_belief):
        deps = dependencies_of(initial_belief, NodeId.parse("C1"))
        assert sorted(str(d) for d in deps) == ["A1", "A2", "E1", "E2"]

    def test_dependencies_of_evidence_are_definitions(self, initial_belief):
        deps = dependencies_of(initial_belief, NodeId.parse("E3"))
        assert sorted(str(d) for d in deps) == ["D5"]

    def test_active_dependencies_skip_retracted(self, final_belief):
        # C3 is retracted; nothing active should point through it.
        deps = active_dependencies_of(final_belief, NodeId.parse("C2"))
        assert all(not final_belief.is_retracted(d) for d in deps)

    def test_support_closure_reaches_definitions(self, initial_belief):
        closure = support_closure(initial_belief, NodeId.parse("C1"))
        names = {str(n) for n in closure}
        assert {"A1", "A2", "E1", "E2", "D1", "D2", "D3"} <= names
        assert "C1" not in names

    def test_node_text_is_nonempty_for_all_nodes(self, initial_belief):
        for kind in NodeKind:
            for node in initial_belief.collection(kind).values():
                assert node_text(node).strip()


class TestStatuses:
    def test_is_retracted(self, final_belief):
        assert final_belief.is_retracted(NodeId.parse("C1"))
        assert not final_belief.is_retracted(NodeId.parse("C2"))

    def test_revised_nodes_keep_strength(self, final_belief):
        node = final_belief.node(NodeId.parse("A2"))
        assert node.status is NodeStatus.REVISED
        assert node.strength == 0.46

"""Belief graph construction and vulnerability reporting."""

from __future__ import annotations

import dataclasses
import json

import pytest

from dialectic.graph import (
    THESIS,
    InvalidBeliefError,
    build_graph,
    find_orphans,
    vulnerability_report,
)
from dialectic.model import NodeId, NodeStatus


class TestBuildGraph:
    def test_nodes_cover_all_collections(self, initial_belief):
        graph = build_graph(initial_belief)
        assert len(graph.nodes) == 5 + 4 + 4 + 3 + 4 + 3

    def test_strength_edges_point_toward_supported(self, initial_belief):
        graph = build_graph(initial_belief)
        assert (NodeId.parse("D1"), NodeId.parse("A1")) in graph.strength_edges
        assert (NodeId.parse("E1"), NodeId.parse("C1")) in graph.strength_edges
        assert (NodeId.parse("C1"), THESIS) in graph.strength_edges

    def test_retracted_claims_do_not_feed_thesis(self, final_belief):
        graph = build_graph(final_belief)
        assert (NodeId.parse("C1"), THESIS) not in graph.strength_edges
        assert (NodeId.parse("C2"), THESIS) in graph.strength_edges

    def test_challenge_edges(self, initial_belief):
        graph = build_graph(initial_belief)
        assert (NodeId.parse("X1"), NodeId.parse("C1")) in graph.challenge_edges
        assert (NodeId.parse("U1"), NodeId.parse("C1")) in graph.challenge_edges

    def test_invalid_belief_rejected(self, initial_belief):
        claim = initial_belief.node(NodeId.parse("C1"))
        broken = initial_belief.with_node(
            dataclasses.replace(claim, strength=7.0))
        with pytest.raises(InvalidBeliefError):
            build_graph(broken)
        # Callers that already validated can skip the check.
        build_graph(broken, validated=True)


class TestOrphans:
    def test_fixtures_have_no_orphans(self, initial_belief, final_belief):
        for belief in (initial_belief, final_belief):
            assert find_orphans(build_graph(belief, validated=True),
                                belief) == []

    def test_orphan_detected_when_supports_retracted(self, initial_belief):
        belief = initial_belief
        for raw in ("D4", "D5"):
            node = belief.node(NodeId.parse(raw))
            belief = belief.with_node(dataclasses.replace(
                node, status=NodeStatus.RETRACTED, strength=0.0))
        orphans = find_orphans(build_graph(belief, validated=True), belief)
        # A3 rests on D4+D5 only; E3 on D5 only; E4 and A4 on D4 only.
        assert NodeId.parse("A3") in orphans
        assert NodeId.parse("E3") in orphans


class TestVulnerabilityReport:
    def test_initial_fixture_report(self, initial_belief):
        report = vulnerability_report(initial_belief, low_threshold=0.65)
        low_ids = [str(nid) for nid, _ in report.low_strength]
        assert "A4" in low_ids  # 0.6 < 0.65
        assert "C3" in low_ids
        assert [str(i) for i in report.open_counterpositions] == ["X1", "X2"]
        assert [str(i) for i in report.open_uncertainties] == ["U1", "U2", "U3"]
        assert report.orphans == ()

    def test_final_fixture_has_no_open_uncertainties(self, final_belief):
        report = vulnerability_report(final_belief, low_threshold=0.65)
        assert report.open_uncertainties == ()

    def test_to_dict_is_json_safe(self, initial_belief):
        report = vulnerability_report(initial_belief, low_threshold=0.65)
        doc = json.loads(json.dumps(report.to_dict()))
        assert set(doc) == {"low_strength", "open_counterpositions",
                            "open_uncertainties", "orphans"}

"""Adjudication, obligations, and exchange-schedule tests."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dialectic.model import NodeId, NodeKind
from dialectic.patches import Patch, PatchOp
from dialectic.protocol import (
    AdjudicatorParams,
    Challenge,
    Exchange,
    Obligation,
    ObligationSet,
    Rebuttal,
    RebuttalAction,
    Scores,
    Verdict,
    VerdictKind,
    check_obligations,
    combine_and_judge,
    enforcement_obligations,
    exchange_schedule,
    support_set,
)

DEFAULTS = AdjudicatorParams()


def scores(lc, ec, ld, ed) -> Scores:
    return Scores(logic_challenger=lc, ethics_challenger=ec,
                  logic_defender=ld, ethics_defender=ed)


class TestAdjudicationGoldens:
    def test_pure_logic_clear_win(self):
        params = AdjudicatorParams(w_logic=1.0, w_ethics=0.0, tau=0.15)
        verdict = combine_and_judge(scores(0.8, 0.0, 0.3, 0.0), params)
        assert verdict.kind is VerdictKind.CRITIQUE_VALID
        assert verdict.combined_challenger == pytest.approx(0.8)
        assert verdict.combined_defender == pytest.approx(0.3)

    def test_mixed_axes_above_threshold(self):
        # Combined 0.70 vs 0.55 at equal weights clears tau exactly.
        verdict = combine_and_judge(scores(0.7, 0.7, 0.55, 0.55), DEFAULTS)
        assert verdict.kind is VerdictKind.CRITIQUE_VALID

    def test_exact_tie_is_unresolved(self):
        verdict = combine_and_judge(scores(0.55, 0.55, 0.55, 0.55), DEFAULTS)
        assert verdict.kind is VerdictKind.UNRESOLVED

    def test_defender_margin_gives_rebuttal_valid(self):
        verdict = combine_and_judge(scores(0.3, 0.3, 0.8, 0.8), DEFAULTS)
        assert verdict.kind is VerdictKind.REBUTTAL_VALID

    def test_margin_below_tau_is_unresolved(self):
        verdict = combine_and_judge(scores(0.6, 0.6, 0.5, 0.5), DEFAULTS)
        assert verdict.kind is VerdictKind.UNRESOLVED


class TestPureModes:
    def test_pure_logic_ignores_ethics_axis(self):
        params = AdjudicatorParams(w_logic=1.0, w_ethics=0.0)
        a = combine_and_judge(scores(0.8, 0.0, 0.3, 0.9), params)
        b = combine_and_judge(scores(0.8, 0.9, 0.3, 0.0), params)
        assert a.kind is b.kind is VerdictKind.CRITIQUE_VALID
        assert a.combined_challenger == b.combined_challenger

    def test_pure_ethics_ignores_logic_axis(self):
        params = AdjudicatorParams(w_logic=0.0, w_ethics=1.0)
        verdict = combine_and_judge(scores(0.9, 0.2, 0.1, 0.8), params)
        assert verdict.kind is VerdictKind.REBUTTAL_VALID

    def test_near_zero_weight_triggers_cutoff(self):
        params = AdjudicatorParams(w_logic=0.995, w_ethics=0.005)
        verdict = combine_and_judge(scores(0.8, 0.0, 0.3, 1.0), params)
        assert verdict.combined_defender == pytest.approx(0.3 * 0.995)


class TestConcession:
    def test_concession_forces_critique_valid(self):
        verdict = combine_and_judge(scores(0.1, 0.1, 0.9, 0.9), DEFAULTS,
                                    concession=True)
        assert verdict.kind is VerdictKind.CRITIQUE_VALID

    def test_concession_override_can_be_disabled(self):
        params = AdjudicatorParams(concession_forces_critique=False)
        verdict = combine_and_judge(scores(0.1, 0.1, 0.9, 0.9), params,
                                    concession=True)
        assert verdict.kind is VerdictKind.REBUTTAL_VALID


class TestParamValidation:
    def test_weights_must_sum_to_one(self):
        with pytest.raises(ValueError):
            AdjudicatorParams(w_logic=0.7, w_ethics=0.7)

    def test_tau_range(self):
        with pytest.raises(ValueError):
            AdjudicatorParams(tau=-0.1)

    def test_score_range_checked(self):
        with pytest.raises(ValueError):
            combine_and_judge(scores(1.2, 0.0, 0.0, 0.0), DEFAULTS)

    @given(st.floats(min_value=0.0, max_value=1.0),
           st.floats(min_value=0.0, max_value=1.0),
           st.floats(min_value=0.0, max_value=1.0),
           st.floats(min_value=0.0, max_value=1.0))
    def test_verdict_total(self, lc, ec, ld, ed):
        verdict = combine_and_judge(scores(lc, ec, ld, ed), DEFAULTS)
        margin = verdict.combined_challenger - verdict.combined_defender
        if margin == 0.0:
            assert verdict.kind is VerdictKind.UNRESOLVED
        elif margin >= DEFAULTS.tau - 1e-9:
            assert verdict.kind is VerdictKind.CRITIQUE_VALID
        elif -margin >= DEFAULTS.tau - 1e-9:
            assert verdict.kind is VerdictKind.REBUTTAL_VALID
        else:
            assert verdict.kind is VerdictKind.UNRESOLVED


# ---------------------------------------------------------------------
# Obligations
# ---------------------------------------------------------------------

def make_exchange(kind: VerdictKind, challenge_id="r1.a.b.1",
                  targets=("C1",)) -> Exchange:
    challenge = Challenge(
        id=challenge_id, challenger="a", defender="b",
        text="The inference from E1 to C1 assumes veto reports are reliable.",
        targets=tuple(NodeId.parse(t) for t in targets),
        attack_type="undercutting", attack_strategy="challenge_inference_step")
    rebuttal = Rebuttal(challenge_id=challenge_id,
                        action=RebuttalAction.REFUTE, text="Disagree.")
    verdict = Verdict(kind=kind, scores=scores(0.5, 0.5, 0.5, 0.5),
                      combined_challenger=0.5, combined_defender=0.5)
    return Exchange(round=1, challenge=challenge, rebuttal=rebuttal,
                    verdict=verdict)


class TestObligations:
    def test_each_verdict_maps_to_its_obligation(self):
        exchanges = [make_exchange(VerdictKind.CRITIQUE_VALID, "e1"),
                     make_exchange(VerdictKind.UNRESOLVED, "e2"),
                     make_exchange(VerdictKind.REBUTTAL_VALID, "e3")]
        obligations = enforcement_obligations(exchanges)
        assert [o.exchange_id for o in obligations.weaken] == ["e1"]
        assert [o.exchange_id for o in obligations.add_uncertainty] == ["e2"]
        assert [o.exchange_id for o in obligations.boost] == ["e3"]
        assert len(obligations.all()) == 3

    def test_support_set_contains_targets_and_ancestors(self, initial_belief):
        allowed = support_set(initial_belief, (NodeId.parse("C1"),))
        names = {str(n) for n in allowed}
        assert {"C1", "A1", "A2", "E1", "E2", "D1", "D2", "D3"} <= names
        assert "C2" not in names

    def test_weaken_satisfied_by_lower_strength_plus_counterposition(
            self, initial_belief):
        obligations = ObligationSet(weaken=[
            Obligation("weaken", "e1", (NodeId.parse("C1"),))])
        patches = [
            Patch(op=PatchOp.UPDATE, target_kind=NodeKind.CLAIM,
                  payload={"strength": 0.6}, node_id=NodeId.parse("C1")),
            Patch(op=PatchOp.ADD, target_kind=NodeKind.COUNTERPOSITION,
                  payload={"targets": ["C1"], "attack_type": "undercutting",
                           "attack_strategy": "challenge_inference_step",
                           "statement": "The step is contested.",
                           "my_response": "Partially addressed in revision.",
                           "response_sufficiency": "partial"}),
        ]
        report = check_obligations(initial_belief, obligations, patches)
        assert report.compliant

    def test_weaken_not_satisfied_without_counterposition(self, initial_belief):
        obligations = ObligationSet(weaken=[
            Obligation("weaken", "e1", (NodeId.parse("C1"),))])
        patches = [Patch(op=PatchOp.UPDATE, target_kind=NodeKind.CLAIM,
                         payload={"strength": 0.6}, node_id=NodeId.parse("C1"))]
        report = check_obligations(initial_belief, obligations, patches)
        assert not report.compliant

    def test_weaken_outside_support_set_does_not_count(self, initial_belief):
        obligations = ObligationSet(weaken=[
            Obligation("weaken", "e1", (NodeId.parse("C1"),))])
        patches = [
            # C2 is not in C1's support set.
            Patch(op=PatchOp.UPDATE, target_kind=NodeKind.CLAIM,
                  payload={"strength": 0.1}, node_id=NodeId.parse("C2")),
            Patch(op=PatchOp.ADD, target_kind=NodeKind.COUNTERPOSITION,
                  payload={"targets": ["C1"], "attack_type": "undercutting",
                           "attack_strategy": "challenge_inference_step",
                           "statement": "s", "my_response": "r",
                           "response_sufficiency": "partial"}),
        ]
        report = check_obligations(initial_belief, obligations, patches)
        assert not report.compliant

    def test_sufficient_counterposition_does_not_discharge(self, initial_belief):
        obligations = ObligationSet(weaken=[
            Obligation("weaken", "e1", (NodeId.parse("C1"),))])
        patches = [
            Patch(op=PatchOp.UPDATE, target_kind=NodeKind.CLAIM,
                  payload={"strength": 0.6}, node_id=NodeId.parse("C1")),
            Patch(op=PatchOp.ADD, target_kind=NodeKind.COUNTERPOSITION,
                  payload={"targets": ["C1"], "attack_type": "undercutting",
                           "attack_strategy": "challenge_inference_step",
                           "statement": "s", "my_response": "fully handled",
                           "response_sufficiency": "sufficient"}),
        ]
        report = check_obligations(initial_belief, obligations, patches)
        assert not report.compliant

    def test_retraction_counts_as_weakening(self, initial_belief):
        obligations = ObligationSet(weaken=[
            Obligation("weaken", "e1", (NodeId.parse("C1"),))])
        patches = [
            Patch(op=PatchOp.UPDATE, target_kind=NodeKind.CLAIM,
                  payload={"status": "retracted"}, node_id=NodeId.parse("C1")),
            Patch(op=PatchOp.ADD, target_kind=NodeKind.COUNTERPOSITION,
                  payload={"targets": ["C1"], "attack_type": "undercutting",
                           "attack_strategy": "challenge_inference_step",
                           "statement": "s", "my_response": "r",
                           "response_sufficiency": "unaddressed"}),
        ]
        report = check_obligations(initial_belief, obligations, patches)
        assert report.compliant

    def test_uncertainty_obligation(self, initial_belief):
        obligations = ObligationSet(add_uncertainty=[
            Obligation("add_uncertainty", "e2", (NodeId.parse("C2"),))])
        good = [Patch(op=PatchOp.ADD, target_kind=NodeKind.UNCERTAINTY,
                      payload={"targets": ["C2"], "question": "Open point?",
                               "importance": "medium", "status": "active"})]
        assert check_obligations(initial_belief, obligations, good).compliant
        off_target = [Patch(op=PatchOp.ADD, target_kind=NodeKind.UNCERTAINTY,
                            payload={"targets": ["C3"], "question": "q?",
                                     "importance": "low", "status": "active"})]
        assert not check_obligations(
            initial_belief, obligations, off_target).compliant

    def test_boost_obligations_auto_satisfied(self, initial_belief):
        obligations = ObligationSet(boost=[
            Obligation("boost", "e3", (NodeId.parse("C1"),))])
        report = check_obligations(initial_belief, obligations, [])
        assert report.compliant
        assert report.satisfied == obligations.boost


class TestSchedule:
    def test_two_agent_count(self):
        assert exchange_schedule(2, 5, 5) == 50

    def test_three_agent_count(self):
        assert exchange_schedule(3, 5, 5) == 150

    @given(st.integers(min_value=2, max_value=8),
           st.integers(min_value=1, max_value=10),
           st.integers(min_value=1, max_value=10))
    def test_formula(self, n, s, r):
        assert exchange_schedule(n, s, r) == r * s * n * (n - 1)

    def test_rejects_degenerate_debates(self):
        with pytest.raises(ValueError):
            exchange_schedule(1, 5, 5)
        with pytest.raises(ValueError):
            exchange_schedule(2, 0, 5)


class TestExchangeSerialization:
    def test_roundtrip(self):
        exchange = make_exchange(VerdictKind.CRITIQUE_VALID)
        assert Exchange.from_dict(exchange.to_dict()) == exchange

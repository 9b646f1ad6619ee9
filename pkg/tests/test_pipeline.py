"""End-to-end debate pipeline: determinism, resume, replay, obligations."""

from __future__ import annotations

import dataclasses
import hashlib
import json
from pathlib import Path

import pytest

from dialectic.llm import ProviderError
from dialectic.model import NodeId
from dialectic.patches import Patch
from dialectic.pipeline import (
    ConfigError,
    CheckpointError,
    replay_round,
    resume_debate,
    run_debate,
)
from dialectic.protocol import (
    VerdictKind,
    check_obligations,
    enforcement_obligations,
)
from dialectic.serialize import dumps_belief, load_belief
from dialectic.strength import StrengthParams
from tests.conftest import make_scripted_config, run_scripted_debate

PARAMS = StrengthParams()


def tree_digest(root: Path) -> str:
    digest = hashlib.sha256()
    for path in sorted(root.rglob("*")):
        if path.is_file():
            digest.update(str(path.relative_to(root)).encode())
            digest.update(path.read_bytes())
    return digest.hexdigest()


class TestExchangeCounts:
    def test_two_agents(self, tmp_path):
        artifacts = run_scripted_debate(tmp_path / "run", rounds=5,
                                        challenges_per_pair=5)
        assert len(artifacts.exchanges) == 50
        assert artifacts.run_meta["exchanges"] == 50

    def test_three_agents(self, tmp_path):
        artifacts = run_scripted_debate(
            tmp_path / "run", agents=("alpha", "beta", "gamma"),
            rounds=5, challenges_per_pair=5)
        assert len(artifacts.exchanges) == 150
        # Every exchange is adjudicated: it carries a verdict.
        assert all(ex.verdict.kind in VerdictKind for ex in artifacts.exchanges)

    def test_transcript_matches_exchange_count(self, tmp_path):
        run_scripted_debate(tmp_path / "run", rounds=2, challenges_per_pair=3)
        lines = (tmp_path / "run" / "transcript.jsonl").read_text().splitlines()
        assert len(lines) == 2 * 3 * 2


class TestDeterminism:
    def test_repeat_runs_are_bit_identical(self, tmp_path):
        run_scripted_debate(tmp_path / "a", rounds=3, challenges_per_pair=5)
        run_scripted_debate(tmp_path / "b", rounds=3, challenges_per_pair=5)
        assert tree_digest(tmp_path / "a") == tree_digest(tmp_path / "b")

    def test_parallelism_does_not_change_artifacts(self, tmp_path):
        run_scripted_debate(tmp_path / "p1", rounds=3, challenges_per_pair=5,
                            parallelism=1)
        run_scripted_debate(tmp_path / "p4", rounds=3, challenges_per_pair=5,
                            parallelism=4)
        assert tree_digest(tmp_path / "p1") == tree_digest(tmp_path / "p4")

    def test_seed_changes_artifacts(self, tmp_path):
        run_scripted_debate(tmp_path / "s0", rounds=2, challenges_per_pair=2,
                            seed=0)
        run_scripted_debate(tmp_path / "s1", rounds=2, challenges_per_pair=2,
                            seed=1)
        a = (tmp_path / "s0" / "transcript.jsonl").read_text()
        b = (tmp_path / "s1" / "transcript.jsonl").read_text()
        assert a != b


class TestReplay:
    def test_snapshot_chain_replays_byte_for_byte(self, tmp_path):
        out = tmp_path / "run"
        run_scripted_debate(out, rounds=3, challenges_per_pair=5)
        for round_no in (1, 2, 3):
            record = json.loads(
                (out / "checkpoints" /
                 f"round_{round_no:03d}_stage5.json").read_text())
            for agent in ("alpha", "beta"):
                prev = load_belief(
                    out / "beliefs" / agent / f"round_{round_no - 1}.json")
                replayed = replay_round(prev, record["agents"][agent], PARAMS)
                stored = (out / "beliefs" / agent /
                          f"round_{round_no}.json").read_text()
                assert dumps_belief(replayed) + "\n" == stored, \
                    (agent, round_no)


class TestResume:
    def test_resume_completes_partial_run(self, tmp_path):
        pristine = tmp_path / "full"
        run_scripted_debate(pristine, rounds=3, challenges_per_pair=3)

        partial = tmp_path / "partial"
        partial.mkdir()
        # Copy the config plus everything through round 2, as if the
        # process died mid-run.
        (partial / "config.snapshot").write_text(
            (pristine / "config.snapshot").read_text())
        (partial / "checkpoints").mkdir()
        for path in sorted((pristine / "checkpoints").glob("*.json")):
            if int(path.name.split("_")[1]) <= 2:
                (partial / "checkpoints" / path.name).write_text(
                    path.read_text())
        for agent in ("alpha", "beta"):
            (partial / "beliefs" / agent).mkdir(parents=True)
            for round_no in (0, 1, 2):
                name = f"round_{round_no}.json"
                (partial / "beliefs" / agent / name).write_text(
                    (pristine / "beliefs" / agent / name).read_text())

        artifacts = resume_debate(partial)
        assert artifacts.run_meta["complete"] is True
        assert tree_digest(partial) == tree_digest(pristine)

    def test_resume_without_snapshot_raises(self, tmp_path):
        (tmp_path / "empty").mkdir()
        with pytest.raises(CheckpointError):
            resume_debate(tmp_path / "empty")

    def test_mismatched_config_rejected(self, tmp_path):
        out = tmp_path / "run"
        run_scripted_debate(out, rounds=2, challenges_per_pair=2)
        other = make_scripted_config(out, rounds=2, challenges_per_pair=2,
                                     seed=99)
        with pytest.raises(ConfigError,
                           match="different config"):
            run_debate(other)

    def test_rerun_on_complete_artifacts_is_stable(self, tmp_path):
        out = tmp_path / "run"
        run_scripted_debate(out, rounds=2, challenges_per_pair=2)
        before = tree_digest(out)
        resume_debate(out)  # all checkpoints exist; nothing recomputed
        assert tree_digest(out) == before


class TestObligationEnforcement:
    def _load_round(self, out: Path, round_no: int):
        exchanges_doc = json.loads(
            (out / "checkpoints" / f"round_{round_no:03d}_stage4.json")
            .read_text())
        record = json.loads(
            (out / "checkpoints" / f"round_{round_no:03d}_stage5.json")
            .read_text())
        from dialectic.protocol import Exchange
        exchanges = [Exchange.from_dict(e) for e in exchanges_doc["exchanges"]]
        return exchanges, record

    def test_every_verdict_is_discharged(self, tmp_path):
        out = tmp_path / "run"
        run_scripted_debate(out, rounds=3, challenges_per_pair=5)
        for round_no in (1, 2, 3):
            exchanges, record = self._load_round(out, round_no)
            for agent in ("alpha", "beta"):
                prev = load_belief(
                    out / "beliefs" / agent / f"round_{round_no - 1}.json")
                post = load_belief(
                    out / "beliefs" / agent / f"round_{round_no}.json")
                own = [ex for ex in exchanges
                       if ex.challenge.defender == agent]
                obligations = enforcement_obligations(own)
                rec = record["agents"][agent]
                patches = [Patch.from_dict(p) for p in rec["phase1_patches"]]
                # The applied batch satisfies every weaken/uncertainty
                # obligation against the round-(r-1) snapshot.
                report = check_obligations(prev, obligations, patches)
                assert report.compliant, (agent, round_no)
                # Unresolved verdicts leave a visible new uncertainty.
                for ob in obligations.add_uncertainty:
                    new_us = [u for nid, u in post.uncertainties.items()
                              if nid not in prev.uncertainties]
                    assert any(set(ob.targets) & set(u.targets)
                               for u in new_us), (agent, round_no, ob)
                # Critique verdicts leave a capped counterposition.
                for ob in obligations.weaken:
                    capped = [
                        x for nid, x in post.counterpositions.items()
                        if nid not in prev.counterpositions
                        and x.response_sufficiency.value in ("partial",
                                                             "unaddressed")
                    ]
                    assert any(set(ob.targets) & set(x.targets)
                               for x in capped), (agent, round_no, ob)
                # Rebuttal verdicts boost the challenge targets.
                for ob in obligations.boost:
                    for target in ob.targets:
                        assert str(target) in rec["boost_targets"]
                        node = post.node(target)
                        if node is not None and not post.is_retracted(target):
                            assert node.consecutive_defenses >= 1

    def test_scripted_noncompliance_is_engine_enforced(self, tmp_path):
        out = tmp_path / "run"
        run_scripted_debate(out, rounds=1, challenges_per_pair=5)
        _, record = self._load_round(out, 1)
        # The scripted agents submit no phase-1 patches, so any weaken or
        # uncertainty obligation must have been synthesized by the engine.
        exchanges, _ = self._load_round(out, 1)
        for agent in ("alpha", "beta"):
            own = [ex for ex in exchanges if ex.challenge.defender == agent]
            obligations = enforcement_obligations(own)
            if obligations.weaken or obligations.add_uncertainty:
                assert record["agents"][agent]["engine_enforced"]


class FailingBackend:
    """Delegates to a scripted backend but fails selected stages."""

    def __init__(self, inner, fail_challenges_for=(), fail_rebuttals_for=()):
        self.inner = inner
        self.fail_challenges_for = set(fail_challenges_for)
        self.fail_rebuttals_for = set(fail_rebuttals_for)

    def __getattr__(self, name):
        return getattr(self.inner, name)

    def generate_challenges(self, agent, round_no, opponent, *args, **kwargs):
        if (round_no, agent) in self.fail_challenges_for:
            raise ProviderError("simulated outage")
        return self.inner.generate_challenges(agent, round_no, opponent,
                                              *args, **kwargs)

    def generate_rebuttals(self, agent, round_no, *args, **kwargs):
        if (round_no, agent) in self.fail_rebuttals_for:
            raise ProviderError("simulated outage")
        return self.inner.generate_rebuttals(agent, round_no, *args, **kwargs)


class TestDegradedPaths:
    def test_challenge_outage_drops_pair_but_run_completes(self, tmp_path):
        config = make_scripted_config(tmp_path / "run", rounds=2,
                                      challenges_per_pair=3)
        for member in config.council:
            member.backend = FailingBackend(
                member.backend, fail_challenges_for={(1, "alpha")})
        config.adjudicator_backend = FailingBackend(config.adjudicator_backend)
        artifacts = run_debate(config)
        # Round 1 loses alpha's 3 challenges; round 2 is intact.
        assert len(artifacts.exchanges) == (3 + 6)
        assert artifacts.run_meta["complete"] is True

    def test_rebuttal_outage_defers_all(self, tmp_path):
        config = make_scripted_config(tmp_path / "run", rounds=1,
                                      challenges_per_pair=2)
        for member in config.council:
            member.backend = FailingBackend(
                member.backend, fail_rebuttals_for={(1, "beta")})
        config.adjudicator_backend = FailingBackend(config.adjudicator_backend)
        artifacts = run_debate(config)
        deferred = [ex for ex in artifacts.exchanges
                    if ex.challenge.defender == "beta"]
        assert deferred
        for ex in deferred:
            assert ex.rebuttal.action.value == "defer"
            assert "degraded" in ex.rebuttal.text


class TestRunMeta:
    def test_elapsed_not_serialized(self, tmp_path):
        artifacts = run_scripted_debate(tmp_path / "run", rounds=1,
                                        challenges_per_pair=1)
        on_disk = json.loads((tmp_path / "run" / "run_meta.json").read_text())
        assert on_disk["elapsed_s"] is None
        assert artifacts.run_meta["elapsed_s"] is not None
        assert on_disk["config_hash"] == artifacts.run_meta["config_hash"]

    def test_metrics_cover_round_zero(self, tmp_path):
        artifacts = run_scripted_debate(tmp_path / "run", rounds=2,
                                        challenges_per_pair=1)
        rows = [(r.round, r.agent) for r in artifacts.metrics]
        assert (0, "alpha") in rows and (2, "beta") in rows
        assert len(rows) == 3 * 2


class TestConfigValidation:
    def test_duplicate_agents_rejected(self, tmp_path):
        config = make_scripted_config(tmp_path / "run")
        config.council[1] = dataclasses.replace(config.council[1],
                                                agent_id="alpha")
        with pytest.raises(ConfigError):
            run_debate(config)

    def test_single_agent_rejected(self, tmp_path):
        config = make_scripted_config(tmp_path / "run")
        config.council = config.council[:1]
        with pytest.raises(ConfigError):
            run_debate(config)

    def test_unknown_persona_rejected(self, tmp_path):
        config = make_scripted_config(tmp_path / "run")
        config.council[0] = dataclasses.replace(config.council[0],
                                                persona="devil_advocate")
        with pytest.raises(ConfigError):
            run_debate(config)

"""Debate orchestration: Stage 0 briefing context, Stage 1 openings, and
the per-round loop of challenges, rebuttals, adjudication, and revision.

Every stage writes a checkpoint file; re-running (or resuming) a partially
completed run loads completed stages from checkpoints instead of
re-executing them, so a crashed run continues from the first incomplete
stage and deterministic backends reproduce the uninterrupted artifacts.
"""

from __future__ import annotations

import hashlib
import json
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Optional

from .agents import AdjudicatorBackend, AgentBackend, ScriptedScenario, scripted_backend
from .analytics import MetricsRow, metrics_row, write_metrics_csv
from .graph import vulnerability_report
from .llm import ProviderError
from .model import (
    Belief,
    NodeId,
    NodeKind,
    NodeStatus,
    Thesis,
    round_strength,
)
from .patches import Patch, PatchOp, apply_patches
from .protocol import (
    AdjudicatorParams,
    Challenge,
    Exchange,
    Obligation,
    Rebuttal,
    RebuttalAction,
    VerdictKind,
    check_obligations,
    combine_and_judge,
    enforcement_obligations,
    support_set,
)
from .registry import Registry, default_registry
from .serialize import belief_to_dict, belief_from_dict, load_belief, save_belief
from .strength import StrengthParams, apply_defense_boosts, position_analysis, recompute_thesis
from .validation import validate_belief

log = logging.getLogger(__name__)

BACKEND_FAILURES: tuple = (ProviderError,)
try:  # the LLM backend is optional at runtime
    from .llm_backend import StructuredOutputError
    BACKEND_FAILURES = (ProviderError, StructuredOutputError)
except ImportError:  # pragma: no cover
    pass


class ConfigError(ValueError):
    pass


class CheckpointError(RuntimeError):
    pass


@dataclass
class CouncilMember:
    agent_id: str
    persona: str
    backend: AgentBackend
    preloaded_belief: Optional[str] = None  # path to a belief document

    def describe(self) -> dict:
        return {
            "agent_id": self.agent_id,
            "persona": self.persona,
            "preloaded_belief": self.preloaded_belief,
        }


@dataclass
class DebateConfig:
    topic: str
    rounds: int
    challenges_per_pair: int
    council: list[CouncilMember]
    adjudicator: AdjudicatorParams
    adjudicator_backend: AdjudicatorBackend
    strength: StrengthParams = field(default_factory=StrengthParams)
    output_dir: Path = Path("debate_out")
    parallelism: int = 1
    seed: int = 0
    raise_increment: float = 0.05
    add_above_delta: float = 0.10
    registry: Optional[Registry] = None
    backend_descriptor: dict = field(default_factory=dict)

    def validate(self) -> None:
        if len(self.council) < 2:
            raise ConfigError("a debate needs at least 2 council members")
        if self.rounds < 0 or self.challenges_per_pair < 1:
            raise ConfigError("rounds must be >= 0 and S >= 1")
        if self.parallelism < 1:
            raise ConfigError("parallelism must be >= 1")
        ids = [m.agent_id for m in self.council]
        if len(set(ids)) != len(ids):
            raise ConfigError("duplicate agent ids")
        registry = self.registry or default_registry()
        for member in self.council:
            if member.persona not in registry.personas:
                raise ConfigError(f"unresolved persona key {member.persona!r}")
        if self.adjudicator.logic_system not in registry.logic_systems:
            raise ConfigError(
                f"unresolved logic system {self.adjudicator.logic_system!r}")
        if self.adjudicator.ethics_system not in registry.ethics_systems:
            raise ConfigError(
                f"unresolved ethics system {self.adjudicator.ethics_system!r}")

    def snapshot(self) -> dict:
        return {
            "topic": self.topic,
            "rounds": self.rounds,
            "challenges_per_pair": self.challenges_per_pair,
            "council": [m.describe() for m in self.council],
            "adjudicator": {
                "logic_system": self.adjudicator.logic_system,
                "ethics_system": self.adjudicator.ethics_system,
                "w_logic": self.adjudicator.w_logic,
                "w_ethics": self.adjudicator.w_ethics,
                "tau": self.adjudicator.tau,
                "concession_forces_critique":
                    self.adjudicator.concession_forces_critique,
            },
            "strength": {
                "p": self.strength.p,
                "s_orph": self.strength.s_orph,
                "boost_b": self.strength.boost_b,
                "boost_cmax": self.strength.boost_cmax,
            },
            "seed": self.seed,
            "raise_increment": self.raise_increment,
            "add_above_delta": self.add_above_delta,
            "backend": self.backend_descriptor,
        }


@dataclass
class DebateArtifacts:
    output_dir: Path
    exchanges: list[Exchange] = field(default_factory=list)
    beliefs: dict[tuple[str, int], Belief] = field(default_factory=dict)
    metrics: list[MetricsRow] = field(default_factory=list)
    run_meta: dict = field(default_factory=dict)


# ---------------------------------------------------------------------
# checkpoint plumbing

def _checkpoint_path(out: Path, round_no: int, stage: str) -> Path:
    return out / "checkpoints" / f"round_{round_no:03d}_{stage}.json"


def _write_checkpoint(path: Path, payload: Any) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, sort_keys=True) + "\n")


def _read_checkpoint(path: Path) -> Any:
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise CheckpointError(f"inconsistent checkpoint: {path}: {exc}") from exc


def _belief_path(out: Path, agent: str, round_no: int) -> Path:
    return out / "beliefs" / agent / f"round_{round_no}.json"


# ---------------------------------------------------------------------
# stage 1

def initialize_tracking(belief: Belief) -> Belief:
    """Stage-1 defense bookkeeping: original_strength := strength,
    consecutive_defenses := 0 on every strength-bearing node."""
    for node in belief.strength_bearing_nodes().values():
        belief = belief.with_node(replace(
            node, original_strength=node.strength, consecutive_defenses=0))
    return belief


def _stage1(config: DebateConfig, out: Path) -> dict[str, Belief]:
    marker = _checkpoint_path(out, 0, "stage1")
    beliefs: dict[str, Belief] = {}
    if marker.exists():
        for member in config.council:
            path = _belief_path(out, member.agent_id, 0)
            if not path.exists():
                raise CheckpointError(f"inconsistent checkpoint: missing {path}")
            beliefs[member.agent_id] = load_belief(path)
        return beliefs
    for member in config.council:
        if member.preloaded_belief:
            belief = load_belief(member.preloaded_belief)
        else:
            belief = member.backend.generate_opening(
                member.agent_id, config.topic, member.persona)
        report = validate_belief(belief)
        if not report.valid:
            raise ConfigError(
                f"opening belief for {member.agent_id} invalid:\n{report}")
        belief = initialize_tracking(belief)
        beliefs[member.agent_id] = belief
        path = _belief_path(out, member.agent_id, 0)
        path.parent.mkdir(parents=True, exist_ok=True)
        save_belief(belief, path)
    _write_checkpoint(marker, {"agents": sorted(beliefs)})
    return beliefs


# ---------------------------------------------------------------------
# stages 2-4

def _ordered_pairs(agents: list[str]) -> list[tuple[str, str]]:
    return [(c, d) for c in sorted(agents) for d in sorted(agents) if c != d]


def _stage2(config: DebateConfig, out: Path, round_no: int,
            beliefs: dict[str, Belief],
            prior: list[Exchange]) -> tuple[dict[tuple[str, str], list[Challenge]], list[str]]:
    path = _checkpoint_path(out, round_no, "stage2")
    if path.exists():
        doc = _read_checkpoint(path)
        challenges = {
            (entry["challenger"], entry["defender"]):
                [Challenge.from_dict(c) for c in entry["challenges"]]
            for entry in doc["pairs"]
        }
        return challenges, doc["degraded"]
    members = {m.agent_id: m for m in config.council}
    pairs = _ordered_pairs(list(beliefs))
    degraded: list[str] = []

    def work(pair: tuple[str, str]):
        challenger, defender = pair
        prior_context = [
            ex.to_dict() for ex in prior
            if ex.challenge.challenger == challenger
            and ex.challenge.defender == defender
        ]
        vuln = vulnerability_report(beliefs[defender], low_threshold=0.65)
        try:
            return members[challenger].backend.generate_challenges(
                challenger, round_no, defender, beliefs[challenger],
                beliefs[defender], vuln, prior_context,
                config.challenges_per_pair)
        except BACKEND_FAILURES as exc:
            log.warning("stage2 degraded for %s->%s: %s",
                        challenger, defender, exc)
            return exc

    results = _parallel_map(work, pairs, config.parallelism)
    challenges: dict[tuple[str, str], list[Challenge]] = {}
    for pair, result in zip(pairs, results):
        if isinstance(result, Exception):
            challenges[pair] = []
            degraded.append(pair[0])
        else:
            challenges[pair] = list(result)
    _write_checkpoint(path, {
        "pairs": [
            {"challenger": c, "defender": d,
             "challenges": [ch.to_dict() for ch in challenges[(c, d)]]}
            for c, d in pairs
        ],
        "degraded": sorted(set(degraded)),
    })
    return challenges, sorted(set(degraded))


def _stage3(config: DebateConfig, out: Path, round_no: int,
            beliefs: dict[str, Belief],
            challenges: dict[tuple[str, str], list[Challenge]]
            ) -> tuple[dict[str, Rebuttal], list[str]]:
    path = _checkpoint_path(out, round_no, "stage3")
    if path.exists():
        doc = _read_checkpoint(path)
        return ({cid: Rebuttal.from_dict(r)
                 for cid, r in doc["rebuttals"].items()}, doc["degraded"])
    members = {m.agent_id: m for m in config.council}
    incoming: dict[str, list[Challenge]] = {a: [] for a in beliefs}
    for (challenger, defender), chs in sorted(challenges.items()):
        incoming[defender].extend(chs)
    degraded: list[str] = []
    defenders = sorted(beliefs)

    def work(defender: str):
        if not incoming[defender]:
            return []
        try:
            return members[defender].backend.generate_rebuttals(
                defender, round_no, beliefs[defender], incoming[defender])
        except BACKEND_FAILURES as exc:
            log.warning("stage3 degraded for %s: %s", defender, exc)
            return exc

    results = _parallel_map(work, defenders, config.parallelism)
    rebuttals: dict[str, Rebuttal] = {}
    for defender, result in zip(defenders, results):
        if isinstance(result, Exception):
            degraded.append(defender)
            # Degraded path: defer every incoming challenge.
            result = [Rebuttal(challenge_id=ch.id,
                               action=RebuttalAction.DEFER,
                               text="(degraded: no rebuttal produced)")
                      for ch in incoming[defender]]
        for reb in result:
            rebuttals[reb.challenge_id] = reb
    _write_checkpoint(path, {
        "rebuttals": {cid: r.to_dict() for cid, r in sorted(rebuttals.items())},
        "degraded": sorted(set(degraded)),
    })
    return rebuttals, sorted(set(degraded))


def _stage4(config: DebateConfig, out: Path, round_no: int,
            beliefs: dict[str, Belief],
            challenges: dict[tuple[str, str], list[Challenge]],
            rebuttals: dict[str, Rebuttal]) -> list[Exchange]:
    path = _checkpoint_path(out, round_no, "stage4")
    if path.exists():
        doc = _read_checkpoint(path)
        return [Exchange.from_dict(e) for e in doc["exchanges"]]
    # Canonical order: (challenger, defender, index within the pair).
    ordered: list[Challenge] = []
    for pair in _ordered_pairs(list(beliefs)):
        ordered.extend(challenges.get(pair, []))
    complete = []
    for ch in ordered:
        if ch.id in rebuttals:
            complete.append((ch, rebuttals[ch.id]))
        else:
            log.warning("incomplete pair skipped: challenge %s has no "
                        "rebuttal", ch.id)

    def work(item: tuple[Challenge, Rebuttal]):
        ch, reb = item
        scores, reasoning = config.adjudicator_backend.score_pair(
            round_no, ch, reb,
            _adjudication_excerpt(beliefs[ch.challenger], ch.targets),
            _adjudication_excerpt(beliefs[ch.defender], ch.targets))
        verdict = combine_and_judge(
            scores, config.adjudicator, reasoning=reasoning,
            concession=reb.action is RebuttalAction.CONCEDE)
        return Exchange(round=round_no, challenge=ch, rebuttal=reb,
                        verdict=verdict)

    exchanges = _parallel_map(work, complete, config.parallelism)
    _write_checkpoint(path, {
        "exchanges": [e.to_dict() for e in exchanges],
    })
    return exchanges


def _adjudication_excerpt(belief: Belief, targets) -> dict:
    """Targeted nodes plus their transitive dependents; the adjudicator
    sees anonymized excerpts, never personas or agent ids."""
    doc = belief_to_dict(belief)
    wanted = {str(t) for t in targets}
    changed = True
    while changed:
        changed = False
        for key in ("assumptions", "evidence", "claims"):
            for nid, node in doc[key].items():
                refs = set(node.get("depends_on", [])) \
                    | set(node.get("supported_by_definitions", []))
                if nid not in wanted and refs & wanted:
                    wanted.add(nid)
                    changed = True
    excerpt: dict = {"thesis": doc["thesis"]}
    for key in ("definitions", "assumptions", "evidence", "claims"):
        excerpt[key] = {nid: node for nid, node in doc[key].items()
                        if nid in wanted}
    return excerpt


def _parallel_map(fn, items, parallelism: int) -> list:
    if parallelism <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------
# stage 5

def _synthesize_patches(belief: Belief, unsatisfied: list[Obligation],
                        challenge_by_id: dict[str, Challenge]
                        ) -> list[Patch]:
    """Engine-enforced minimal compliance: a 0.05 strength reduction on
    the primary target plus a capped counterposition per weaken
    obligation, and a new uncertainty per unresolved obligation."""
    patches: list[Patch] = []
    for ob in unsatisfied:
        challenge = challenge_by_id.get(ob.exchange_id)
        text = ob.challenge_text or f"Challenge {ob.exchange_id}"
        targets = [str(t) for t in ob.targets
                   if belief.node(t) is not None and not belief.is_retracted(t)]
        if not targets:
            continue
        if ob.kind == "weaken":
            primary = NodeId.parse(targets[0])
            node = belief.node(primary)
            patches.append(Patch(
                op=PatchOp.UPDATE,
                target_kind=primary.kind,
                node_id=primary,
                payload={
                    "strength": round_strength(max(0.0, node.strength - 0.05)),
                    "strength_justification":
                        f"Engine-enforced weakening for {ob.exchange_id}.",
                },
            ))
            patches.append(Patch(
                op=PatchOp.ADD,
                target_kind=NodeKind.COUNTERPOSITION,
                payload={
                    "targets": targets,
                    "attack_type": challenge.attack_type if challenge
                    else "undermining",
                    "attack_strategy": challenge.attack_strategy if challenge
                    else "challenge_assumption",
                    "statement": text,
                    "my_response": "",
                    "response_sufficiency": "unaddressed",
                },
            ))
        elif ob.kind == "add_uncertainty":
            patches.append(Patch(
                op=PatchOp.ADD,
                target_kind=NodeKind.UNCERTAINTY,
                payload={
                    "targets": targets,
                    "question": text,
                    "importance": "high",
                    "status": "active",
                },
            ))
    return patches


def _apply_phase1(belief: Belief, patches: list[Patch],
                  weaken_target_lists: list[list[str]],
                  boost_targets: list[str],
                  params: StrengthParams) -> Belief:
    """Deterministic Phase-1 application: mandatory patches (no strength
    filter), defense-streak resets on weakened obligated nodes, then
    defense boosts. Used identically by the live path and replay."""
    weaken_scope: set[str] = set()
    for targets in weaken_target_lists:
        ids = [NodeId.parse(t) for t in targets]
        weaken_scope |= {str(n) for n in support_set(belief, tuple(ids))}
    result = apply_patches(belief, patches, phase2_strength_filter=False,
                           params=params)
    belief = result.belief_out
    # A successful critique resets the defense streak of the nodes it
    # forced down.
    lowered = {r.node_id for r in result.changelog.records
               if r.new_strength < r.old_strength and r.node_id != "thesis"}
    for node_text_id in sorted(lowered & weaken_scope):
        nid = NodeId.parse(node_text_id)
        node = belief.node(nid)
        if node is not None and getattr(node, "consecutive_defenses", 0):
            belief = belief.with_node(replace(node, consecutive_defenses=0))
    targets = []
    for t in boost_targets:
        nid = NodeId.parse(t)
        node = belief.node(nid)
        if (node is not None
                and nid.kind not in (NodeKind.COUNTERPOSITION,
                                     NodeKind.UNCERTAINTY)
                and node.status is not NodeStatus.RETRACTED):
            targets.append(nid)
    if targets:
        belief, _ = apply_defense_boosts(belief, targets, params)
    return belief


def _apply_phase2(belief: Belief, patches: list[Patch],
                  thesis_doc: Optional[dict],
                  params: StrengthParams) -> Belief:
    result = apply_patches(belief, patches, phase2_strength_filter=True,
                           params=params)
    belief = result.belief_out
    if thesis_doc:
        belief = belief.with_thesis(Thesis(
            stance=thesis_doc["stance"],
            summary_bullets=tuple(thesis_doc["summary_bullets"]),
            strength=belief.thesis.strength,
            strength_reasoning=thesis_doc.get("strength_reasoning", ""),
        ))
    # Thesis-last rule: the thesis strength is recomputed after all node
    # patches in the batch.
    return recompute_thesis(belief, params)


def _stage5(config: DebateConfig, out: Path, round_no: int,
            beliefs: dict[str, Belief],
            exchanges: list[Exchange]) -> tuple[dict[str, Belief], dict]:
    path = _checkpoint_path(out, round_no, "stage5")
    if path.exists():
        doc = _read_checkpoint(path)
        new_beliefs = {}
        for agent in beliefs:
            snap = _belief_path(out, agent, round_no)
            if not snap.exists():
                raise CheckpointError(f"inconsistent checkpoint: missing {snap}")
            new_beliefs[agent] = load_belief(snap)
        return new_beliefs, doc
    members = {m.agent_id: m for m in config.council}
    challenge_by_id = {ex.challenge.id: ex.challenge for ex in exchanges}
    record: dict = {"agents": {}}
    new_beliefs: dict[str, Belief] = {}
    for agent in sorted(beliefs):
        belief = beliefs[agent]
        backend = members[agent].backend
        own_exchanges = [ex for ex in exchanges
                         if ex.challenge.defender == agent]
        obligations = enforcement_obligations(own_exchanges)
        verdict_context = [ex.to_dict() for ex in own_exchanges]
        engine_enforced = False
        degraded = False
        try:
            patches = backend.revise_phase1(
                agent, round_no, belief, verdict_context, obligations,
                retry=False, diagnostics="")
        except BACKEND_FAILURES:
            patches, degraded = [], True
        compliance = check_obligations(belief, obligations, patches)
        if not compliance.compliant and not degraded:
            diagnostics = "; ".join(
                f"{ob.kind} obligation for {ob.exchange_id} unsatisfied"
                for ob in compliance.unsatisfied)
            try:
                patches = backend.revise_phase1(
                    agent, round_no, belief, verdict_context, obligations,
                    retry=True, diagnostics=diagnostics)
            except BACKEND_FAILURES:
                patches, degraded = [], True
            compliance = check_obligations(belief, obligations, patches)
        if not compliance.compliant:
            patches = list(patches) + _synthesize_patches(
                belief, compliance.unsatisfied, challenge_by_id)
            engine_enforced = True
        weaken_target_lists = [[str(t) for t in ob.targets]
                               for ob in obligations.weaken]
        boost_targets = sorted({str(t) for ob in obligations.boost
                                for t in ob.targets})
        belief = _apply_phase1(belief, patches, weaken_target_lists,
                               boost_targets, config.strength)
        analysis = position_analysis(belief, config.strength,
                                     config.raise_increment,
                                     config.add_above_delta)
        try:
            phase2_patches, thesis = backend.revise_phase2(
                agent, round_no, belief, analysis, compliance)
        except BACKEND_FAILURES:
            phase2_patches, thesis = [], None
            degraded = True
        thesis_doc = None
        if thesis is not None:
            thesis_doc = {
                "stance": thesis.stance,
                "summary_bullets": list(thesis.summary_bullets),
                "strength_reasoning": thesis.strength_reasoning,
            }
        belief = _apply_phase2(belief, list(phase2_patches), thesis_doc,
                               config.strength)
        new_beliefs[agent] = belief
        snap = _belief_path(out, agent, round_no)
        snap.parent.mkdir(parents=True, exist_ok=True)
        save_belief(belief, snap)
        record["agents"][agent] = {
            "phase1_patches": [p.to_dict() for p in patches],
            "weaken_target_lists": weaken_target_lists,
            "boost_targets": boost_targets,
            "phase2_patches": [p.to_dict() for p in phase2_patches],
            "thesis": thesis_doc,
            "engine_enforced": engine_enforced,
            "degraded": degraded,
            "position_analysis": analysis.to_dict(),
        }
    _write_checkpoint(path, record)
    return new_beliefs, record


def replay_round(belief: Belief, agent_record: dict,
                 params: StrengthParams) -> Belief:
    """Re-derive the round-r snapshot from the round-(r-1) snapshot and
    the recorded patch batches and boosts (snapshot-chain invariant)."""
    belief = _apply_phase1(
        belief,
        [Patch.from_dict(p) for p in agent_record["phase1_patches"]],
        agent_record["weaken_target_lists"],
        agent_record["boost_targets"],
        params,
    )
    return _apply_phase2(
        belief,
        [Patch.from_dict(p) for p in agent_record["phase2_patches"]],
        agent_record["thesis"],
        params,
    )


# ---------------------------------------------------------------------
# orchestration

def run_debate(config: DebateConfig) -> DebateArtifacts:
    config.validate()
    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    started = time.time()
    snapshot = config.snapshot()
    snapshot_path = out / "config.snapshot"
    if snapshot_path.exists():
        existing = json.loads(snapshot_path.read_text())
        if existing != snapshot:
            raise ConfigError(
                "output directory holds a run with a different config")
    else:
        snapshot_path.write_text(json.dumps(snapshot, indent=2,
                                            sort_keys=True) + "\n")
    beliefs = _stage1(config, out)
    artifacts = DebateArtifacts(output_dir=out)
    for agent, belief in beliefs.items():
        artifacts.beliefs[(agent, 0)] = belief
    exchanges: list[Exchange] = []
    degraded_by_round: dict[int, set[str]] = {}
    for round_no in range(1, config.rounds + 1):
        challenges, deg2 = _stage2(config, out, round_no, beliefs, exchanges)
        rebuttals, deg3 = _stage3(config, out, round_no, beliefs, challenges)
        round_exchanges = _stage4(config, out, round_no, beliefs,
                                  challenges, rebuttals)
        exchanges.extend(round_exchanges)
        beliefs, record = _stage5(config, out, round_no, beliefs,
                                  round_exchanges)
        degraded = set(deg2) | set(deg3) | {
            a for a, rec in record["agents"].items() if rec["degraded"]}
        degraded_by_round[round_no] = degraded
        for agent, belief in beliefs.items():
            artifacts.beliefs[(agent, round_no)] = belief
    artifacts.exchanges = exchanges
    # metrics: one row per agent per round, including round 0
    for round_no in range(0, config.rounds + 1):
        for agent in sorted(m.agent_id for m in config.council):
            artifacts.metrics.append(metrics_row(
                artifacts.beliefs[(agent, round_no)], agent, round_no,
                exchanges,
                degraded=agent in degraded_by_round.get(round_no, set())))
    transcript = out / "transcript.jsonl"
    transcript.write_text("".join(
        json.dumps(ex.to_dict(), sort_keys=True) + "\n" for ex in exchanges))
    write_metrics_csv(artifacts.metrics, out / "metrics.csv")
    config_hash = hashlib.sha256(
        json.dumps(snapshot, sort_keys=True).encode()).hexdigest()
    artifacts.run_meta = {
        "config_hash": config_hash,
        "rounds": config.rounds,
        "agents": sorted(m.agent_id for m in config.council),
        "exchanges": len(exchanges),
        "elapsed_s": round(time.time() - started, 3),
        "complete": True,
    }
    meta = dict(artifacts.run_meta)
    meta["elapsed_s"] = None  # timing excluded so artifacts stay replayable
    (out / "run_meta.json").write_text(
        json.dumps(meta, indent=2, sort_keys=True) + "\n")
    return artifacts


def resume_debate(artifact_dir: Path,
                  config: Optional[DebateConfig] = None) -> DebateArtifacts:
    """Continue a partial run from its first incomplete stage. When no
    config object is given, one is rebuilt from config.snapshot (scripted
    runs only — LLM runs must pass their config with live backends)."""
    out = Path(artifact_dir)
    snapshot_path = out / "config.snapshot"
    if not snapshot_path.exists():
        raise CheckpointError(f"no config.snapshot in {out}")
    if config is None:
        config = config_from_snapshot(json.loads(snapshot_path.read_text()),
                                      out)
    config.output_dir = out
    return run_debate(config)


def config_from_snapshot(snapshot: dict, out: Path) -> DebateConfig:
    backend_desc = snapshot.get("backend", {})
    if backend_desc.get("kind") != "scripted":
        raise ConfigError(
            "can only rebuild scripted backends from a snapshot; pass a "
            "config with live backends to resume an LLM run")
    from .scenariogen import build_scenario
    openings = {}
    for member in snapshot["council"]:
        source = member["preloaded_belief"]
        if not source:
            raise ConfigError("scripted resume requires preloaded beliefs")
        openings[member["agent_id"]] = load_belief(source)
    scenario = build_scenario(openings, snapshot["rounds"],
                              snapshot["challenges_per_pair"],
                              seed=snapshot["seed"])
    backend = scripted_backend(scenario)
    council = [
        CouncilMember(agent_id=m["agent_id"], persona=m["persona"],
                      backend=backend,
                      preloaded_belief=m["preloaded_belief"])
        for m in snapshot["council"]
    ]
    adj = snapshot["adjudicator"]
    strength = snapshot["strength"]
    return DebateConfig(
        topic=snapshot["topic"],
        rounds=snapshot["rounds"],
        challenges_per_pair=snapshot["challenges_per_pair"],
        council=council,
        adjudicator=AdjudicatorParams(
            logic_system=adj["logic_system"],
            ethics_system=adj["ethics_system"],
            w_logic=adj["w_logic"], w_ethics=adj["w_ethics"],
            tau=adj["tau"],
            concession_forces_critique=adj["concession_forces_critique"]),
        adjudicator_backend=backend,
        strength=StrengthParams(p=strength["p"], s_orph=strength["s_orph"],
                                boost_b=strength["boost_b"],
                                boost_cmax=strength["boost_cmax"]),
        output_dir=out,
        seed=snapshot["seed"],
        raise_increment=snapshot["raise_increment"],
        add_above_delta=snapshot["add_above_delta"],
        backend_descriptor=backend_desc,
    )

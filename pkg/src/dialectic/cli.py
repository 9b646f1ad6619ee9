"""Command-line interface.

Exit statuses are stable contracts: 0 success, 1 validation failure,
2 configuration or I/O error.
"""

from __future__ import annotations

import csv
import json
import sys
from pathlib import Path

import click

from .analytics import HashingEncoder, aps, belief_embedding
from .graph import build_graph, find_orphans, vulnerability_report
from .llm import ChatProviderConfig
from .model import NodeKind
from .pipeline import (
    CheckpointError,
    ConfigError,
    CouncilMember,
    DebateConfig,
    resume_debate,
    run_debate,
)
from .protocol import AdjudicatorParams, Exchange, Scores, combine_and_judge
from .registry import RegistryError, load_registry
from .scenariogen import build_scenario
from .serialize import BeliefParseError, load_belief
from .strength import StrengthParams, position_analysis
from .validation import validate_belief

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_CONFIG = 2


def _fail_config(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_CONFIG)


def _load_belief_or_exit(path: str):
    try:
        return load_belief(path)
    except (OSError, BeliefParseError) as exc:
        _fail_config(str(exc))


@click.group()
def main():
    """Deterministic belief-optimization engine for dialectical debates."""


def _build_config(config_path: str, out: str | None, parallelism: int | None,
                  seed: int | None) -> DebateConfig:
    try:
        doc = json.loads(Path(config_path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        _fail_config(f"cannot read config: {exc}")
    try:
        registry = load_registry(doc.get("resource_path"))
    except RegistryError as exc:
        _fail_config(str(exc))
    backend_doc = doc.get("backend", {"kind": "scripted"})
    seed_value = seed if seed is not None else doc.get("seed", 0)
    rounds = doc["rounds"]
    s_max = doc["challenges_per_pair"]
    council_docs = doc["council"]
    if backend_doc.get("kind") == "scripted":
        openings = {}
        for member in council_docs:
            if not member.get("preloaded_belief"):
                _fail_config("scripted runs require preloaded beliefs")
            openings[member["agent_id"]] = _load_belief_or_exit(
                member["preloaded_belief"])
        scenario = build_scenario(openings, rounds, s_max, seed=seed_value)
        from .agents import scripted_backend
        backend = scripted_backend(scenario)
        adjudicator_backend = backend
        make_backend = lambda member: backend  # noqa: E731
    elif backend_doc.get("kind") == "llm":
        from .llm_backend import LLMBackend
        provider = ChatProviderConfig(**backend_doc["provider"])
        adjudicator_doc = doc.get("adjudicator", {})
        backend = LLMBackend(
            provider=provider, registry=registry,
            logic_key=adjudicator_doc.get("logic_system",
                                          "classical_informal_bayesian"),
            ethics_key=adjudicator_doc.get("ethics_system",
                                           "balanced_rule_utilitarian"),
        )
        adjudicator_backend = backend
        make_backend = lambda member: backend  # noqa: E731
    else:
        _fail_config(f"unknown backend kind {backend_doc.get('kind')!r}")
    council = [
        CouncilMember(
            agent_id=m["agent_id"], persona=m["persona"],
            backend=make_backend(m),
            preloaded_belief=m.get("preloaded_belief"),
        )
        for m in council_docs
    ]
    adj = doc.get("adjudicator", {})
    strength = doc.get("strength", {})
    try:
        return DebateConfig(
            topic=doc["topic"],
            rounds=rounds,
            challenges_per_pair=s_max,
            council=council,
            adjudicator=AdjudicatorParams(
                logic_system=adj.get("logic_system",
                                     "classical_informal_bayesian"),
                ethics_system=adj.get("ethics_system",
                                      "balanced_rule_utilitarian"),
                w_logic=adj.get("w_logic", 0.5),
                w_ethics=adj.get("w_ethics", 0.5),
                tau=adj.get("tau", 0.15),
                concession_forces_critique=adj.get(
                    "concession_forces_critique", True),
            ),
            adjudicator_backend=adjudicator_backend,
            strength=StrengthParams(
                p=strength.get("p", 1.0),
                s_orph=strength.get("s_orph", 0.5),
                boost_b=strength.get("boost_b", 0.02),
                boost_cmax=strength.get("boost_cmax", 0.15),
            ),
            output_dir=Path(out or doc.get("output_dir", "debate_out")),
            parallelism=parallelism or doc.get("parallelism", 1),
            seed=seed_value,
            raise_increment=doc.get("raise_increment", 0.05),
            add_above_delta=doc.get("add_above_delta", 0.10),
            registry=registry,
            backend_descriptor=backend_doc,
        )
    except (KeyError, ValueError) as exc:
        _fail_config(f"bad config: {exc}")


@main.command()
@click.option("--config", "config_path", required=True,
              type=click.Path(exists=True))
@click.option("--out", default=None)
@click.option("--parallelism", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.option("--json", "as_json", is_flag=True)
def run(config_path, out, parallelism, seed, as_json):
    """Run a debate from a config file."""
    config = _build_config(config_path, out, parallelism, seed)
    try:
        artifacts = run_debate(config)
    except ConfigError as exc:
        _fail_config(str(exc))
    summary = {
        "output_dir": str(artifacts.output_dir),
        "exchanges": len(artifacts.exchanges),
        "agents": artifacts.run_meta.get("agents", []),
    }
    if as_json:
        click.echo(json.dumps(summary, sort_keys=True))
    else:
        click.echo(f"run complete: {summary['exchanges']} exchanges in "
                   f"{summary['output_dir']}")


@main.command()
@click.argument("artifact_dir", type=click.Path(exists=True))
@click.option("--json", "as_json", is_flag=True)
def resume(artifact_dir, as_json):
    """Resume a partially completed debate run."""
    try:
        artifacts = resume_debate(Path(artifact_dir))
    except (ConfigError, CheckpointError, OSError) as exc:
        _fail_config(str(exc))
    summary = {"output_dir": str(artifacts.output_dir),
               "exchanges": len(artifacts.exchanges)}
    if as_json:
        click.echo(json.dumps(summary, sort_keys=True))
    else:
        click.echo(f"resume complete: {summary['exchanges']} exchanges")


@main.command()
@click.argument("belief_path", type=click.Path(exists=True))
@click.option("--json", "as_json", is_flag=True)
def validate(belief_path, as_json):
    """Validate a belief document; exit 1 with the report if invalid."""
    belief = _load_belief_or_exit(belief_path)
    report = validate_belief(belief)
    if as_json:
        click.echo(json.dumps({
            "valid": report.valid,
            "violations": [
                {"node_id": v.node_id, "rule": v.rule, "message": v.message}
                for v in report.violations
            ],
        }, sort_keys=True))
    else:
        click.echo(str(report))
    sys.exit(EXIT_OK if report.valid else EXIT_VALIDATION)


@main.command()
@click.argument("belief_path", type=click.Path(exists=True))
@click.option("--low-threshold", type=float, default=0.65)
@click.option("--json", "as_json", is_flag=True)
def inspect(belief_path, low_threshold, as_json):
    """Print graph summary, orphans, vulnerabilities, position analysis."""
    belief = _load_belief_or_exit(belief_path)
    report = validate_belief(belief)
    if not report.valid:
        click.echo(str(report))
        sys.exit(EXIT_VALIDATION)
    graph = build_graph(belief, validated=True)
    analysis = position_analysis(belief, StrengthParams(p=belief.breadth_exponent))
    payload = {
        "nodes": {
            kind.value: len(belief.collection(kind)) for kind in NodeKind
        },
        "strength_edges": len(graph.strength_edges),
        "challenge_edges": len(graph.challenge_edges),
        "orphans": [str(o) for o in find_orphans(graph, belief)],
        "vulnerabilities": vulnerability_report(belief, low_threshold).to_dict(),
        "thesis_strength": belief.thesis.strength,
        "position_analysis": analysis.to_dict(),
    }
    if as_json:
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        for key in ("nodes", "strength_edges", "challenge_edges", "orphans",
                    "thesis_strength"):
            click.echo(f"{key}: {payload[key]}")
        click.echo(f"recommendation: {analysis.recommendation}")


@main.command()
@click.argument("transcript_path", type=click.Path(exists=True))
@click.option("--tau", type=float, default=0.15)
@click.option("--w-logic", type=float, default=0.5)
@click.option("--json", "as_json", is_flag=True)
def score(transcript_path, tau, w_logic, as_json):
    """Recompute verdicts and APS from a recorded transcript."""
    exchanges = []
    try:
        with open(transcript_path) as handle:
            for line in handle:
                if line.strip():
                    exchanges.append(Exchange.from_dict(json.loads(line)))
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        _fail_config(f"cannot read transcript: {exc}")
    params = AdjudicatorParams(w_logic=w_logic, w_ethics=1.0 - w_logic,
                               tau=tau)
    mismatches = []
    for ex in exchanges:
        recomputed = combine_and_judge(
            Scores(ex.verdict.scores.logic_challenger,
                   ex.verdict.scores.ethics_challenger,
                   ex.verdict.scores.logic_defender,
                   ex.verdict.scores.ethics_defender),
            params,
            concession=ex.rebuttal.action.value == "concede")
        if recomputed.kind is not ex.verdict.kind:
            mismatches.append(ex.challenge.id)
    agents = sorted({ex.challenge.challenger for ex in exchanges}
                    | {ex.challenge.defender for ex in exchanges})
    payload = {
        "exchanges": len(exchanges),
        "verdict_mismatches": mismatches,
        "aps": {agent: aps(exchanges, agent) for agent in agents},
    }
    if as_json:
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        click.echo(f"exchanges: {payload['exchanges']}")
        for agent, value in payload["aps"].items():
            click.echo(f"aps[{agent}]: {value}")
        if mismatches:
            click.echo(f"verdict mismatches: {', '.join(mismatches)}")
    sys.exit(EXIT_VALIDATION if mismatches else EXIT_OK)


@main.command()
@click.argument("artifact_dir", type=click.Path(exists=True))
@click.option("--encoder", "encoder_dim", type=int, default=8,
              help="dimension of the bundled hashing encoder")
@click.option("--out", default=None)
@click.option("--json", "as_json", is_flag=True)
def embed(artifact_dir, encoder_dim, out, as_json):
    """Export belief embeddings for every (agent, round) snapshot."""
    root = Path(artifact_dir) / "beliefs"
    if not root.is_dir():
        _fail_config(f"no beliefs directory under {artifact_dir}")
    encoder = HashingEncoder(dimension=encoder_dim)
    rows = []
    for agent_dir in sorted(root.iterdir()):
        for snap in sorted(agent_dir.glob("round_*.json"),
                           key=lambda p: int(p.stem.split("_")[1])):
            belief = _load_belief_or_exit(snap)
            vec = belief_embedding(belief, encoder)
            rows.append((agent_dir.name, int(snap.stem.split("_")[1]), vec))
    out_path = Path(out) if out else Path(artifact_dir) / "embeddings.csv"
    with open(out_path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["agent", "round"]
                        + [f"z{i}" for i in range(10 * encoder_dim + 11)])
        for agent, round_no, vec in rows:
            writer.writerow([agent, round_no] + [repr(v) for v in vec])
    if as_json:
        click.echo(json.dumps({"rows": len(rows), "path": str(out_path),
                               "dimension": 10 * encoder_dim + 11},
                              sort_keys=True))
    else:
        click.echo(f"wrote {len(rows)} embeddings ({10 * encoder_dim + 11} "
                   f"dims) to {out_path}")


if __name__ == "__main__":
    main()

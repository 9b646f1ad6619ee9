"""Shared fixtures for the dialectic test suite."""

from __future__ import annotations

import copy
import json
from pathlib import Path

import pytest

from dialectic.agents import scripted_backend
from dialectic.pipeline import CouncilMember, DebateConfig, run_debate
from dialectic.protocol import AdjudicatorParams
from dialectic.scenariogen import build_scenario
from dialectic.serialize import belief_from_dict, load_belief

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
INITIAL_PATH = FIXTURES / "empiricist_initial.json"
FINAL_PATH = FIXTURES / "empiricist_final.json"


@pytest.fixture(scope="session")
def initial_belief():
    return load_belief(INITIAL_PATH)


@pytest.fixture(scope="session")
def final_belief():
    return load_belief(FINAL_PATH)


@pytest.fixture()
def initial_doc():
    """A mutable dict copy of the initial golden fixture."""
    return copy.deepcopy(json.loads(INITIAL_PATH.read_text()))


@pytest.fixture()
def final_doc():
    return copy.deepcopy(json.loads(FINAL_PATH.read_text()))


def reparse(doc: dict):
    """Parse a (possibly mutated) belief document dict."""
    return belief_from_dict(doc)


def make_scripted_config(
    out_dir: Path,
    *,
    agents=("alpha", "beta"),
    rounds: int = 3,
    challenges_per_pair: int = 5,
    parallelism: int = 1,
    seed: int = 0,
) -> DebateConfig:
    """Assemble a fully scripted debate config seeded from the golden opening."""
    openings = {agent: load_belief(INITIAL_PATH) for agent in agents}
    scenario = build_scenario(openings, rounds, challenges_per_pair, seed=seed)
    backend = scripted_backend(scenario)
    personas = ["empiricist", "skeptic", "pragmatist", "formalist"]
    council = [
        CouncilMember(agent, personas[i % len(personas)], backend, str(INITIAL_PATH))
        for i, agent in enumerate(agents)
    ]
    return DebateConfig(
        topic="libertarian free will is incompatible with observed neuroscience",
        rounds=rounds,
        challenges_per_pair=challenges_per_pair,
        council=council,
        adjudicator=AdjudicatorParams(),
        adjudicator_backend=backend,
        output_dir=out_dir,
        parallelism=parallelism,
        seed=seed,
        backend_descriptor={"kind": "scripted"},
    )


def run_scripted_debate(out_dir: Path, **kwargs):
    return run_debate(make_scripted_config(out_dir, **kwargs))

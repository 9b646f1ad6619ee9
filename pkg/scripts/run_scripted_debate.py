#!/usr/bin/env python3
"""Run a fully scripted demo debate and print a round-by-round summary.

Everything is deterministic: the scripted backend synthesizes challenges,
rebuttals, and adjudicator scores from the seed, so repeated invocations
produce byte-identical artifacts.
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from dialectic.agents import scripted_backend
from dialectic.analytics import aps
from dialectic.pipeline import CouncilMember, DebateConfig, run_debate
from dialectic.protocol import AdjudicatorParams
from dialectic.scenariogen import build_scenario
from dialectic.serialize import load_belief

REPO = Path(__file__).resolve().parent.parent
DEFAULT_OPENING = REPO / "fixtures" / "empiricist_initial.json"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("demo_debate"))
    parser.add_argument("--rounds", type=int, default=3)
    parser.add_argument("--challenges-per-pair", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--parallelism", type=int, default=1)
    parser.add_argument("--opening", type=Path, default=DEFAULT_OPENING,
                        help="belief document every agent starts from")
    args = parser.parse_args()

    agents = [("alpha", "empiricist"), ("beta", "skeptic")]
    openings = {agent: load_belief(args.opening) for agent, _ in agents}
    scenario = build_scenario(openings, args.rounds,
                              args.challenges_per_pair, seed=args.seed)
    backend = scripted_backend(scenario)

    config = DebateConfig(
        topic="libertarian free will is incompatible with observed "
              "neuroscience",
        rounds=args.rounds,
        challenges_per_pair=args.challenges_per_pair,
        council=[CouncilMember(agent, persona, backend, str(args.opening))
                 for agent, persona in agents],
        adjudicator=AdjudicatorParams(),
        adjudicator_backend=backend,
        output_dir=args.out,
        parallelism=args.parallelism,
        seed=args.seed,
        backend_descriptor={"kind": "scripted"},
    )

    artifacts = run_debate(config)

    print(f"artifacts: {artifacts.output_dir}")
    print(f"exchanges: {len(artifacts.exchanges)}")
    for round_no in range(args.rounds + 1):
        parts = []
        for agent, _ in agents:
            belief = artifacts.beliefs[(agent, round_no)]
            score = aps(artifacts.exchanges, agent, upto_round=round_no)
            score_txt = "n/a" if score is None else f"{score:+.3f}"
            parts.append(f"{agent}: thesis={belief.thesis.strength:.4f} "
                         f"aps={score_txt}")
        print(f"round {round_no}:  " + "   ".join(parts))
    meta = json.loads((args.out / "run_meta.json").read_text())
    print(f"config_hash: {meta['config_hash'][:16]}…  "
          f"complete: {meta['complete']}")


if __name__ == "__main__":
    main()

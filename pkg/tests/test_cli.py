"""CLI behavior and exit-code contracts."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from dialectic.cli import EXIT_CONFIG, EXIT_OK, EXIT_VALIDATION, main
from tests.conftest import FINAL_PATH, INITIAL_PATH


@pytest.fixture()
def runner():
    return CliRunner()


def write_config(tmp_path: Path, **overrides) -> Path:
    doc = {
        "topic": "libertarian free will vs observed neuroscience",
        "rounds": 2,
        "challenges_per_pair": 2,
        "council": [
            {"agent_id": "alpha", "persona": "empiricist",
             "preloaded_belief": str(INITIAL_PATH)},
            {"agent_id": "beta", "persona": "skeptic",
             "preloaded_belief": str(INITIAL_PATH)},
        ],
        "backend": {"kind": "scripted"},
        "output_dir": str(tmp_path / "out"),
        "seed": 0,
    }
    doc.update(overrides)
    path = tmp_path / "config.json"
    path.write_text(json.dumps(doc, indent=2))
    return path


class TestValidate:
    def test_valid_fixture_exits_zero(self, runner):
        result = runner.invoke(main, ["validate", str(INITIAL_PATH)])
        assert result.exit_code == EXIT_OK

    def test_json_output(self, runner):
        result = runner.invoke(main, ["validate", str(FINAL_PATH), "--json"])
        assert result.exit_code == EXIT_OK
        assert json.loads(result.output) == {"valid": True, "violations": []}

    def test_invalid_document_exits_one(self, runner, tmp_path, initial_doc):
        del initial_doc["claims"]["C1"]["predictions"]
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(initial_doc))
        result = runner.invoke(main, ["validate", str(bad), "--json"])
        assert result.exit_code == EXIT_VALIDATION
        payload = json.loads(result.output)
        assert not payload["valid"]
        assert any(v["rule"] == "missing_prediction"
                   for v in payload["violations"])

    def test_unparseable_document_exits_two(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        result = runner.invoke(main, ["validate", str(bad)])
        assert result.exit_code == EXIT_CONFIG


class TestInspect:
    def test_final_fixture_thesis(self, runner):
        result = runner.invoke(main, ["inspect", str(FINAL_PATH), "--json"])
        assert result.exit_code == EXIT_OK
        payload = json.loads(result.output)
        assert payload["thesis_strength"] == 0.3675
        assert payload["nodes"]["claim"] == 5
        assert payload["orphans"] == []

    def test_human_output_mentions_recommendation(self, runner):
        result = runner.invoke(main, ["inspect", str(INITIAL_PATH)])
        assert result.exit_code == EXIT_OK
        assert "recommendation:" in result.output


class TestRunResumeScoreEmbed:
    def test_run_and_artifacts(self, runner, tmp_path):
        config = write_config(tmp_path)
        result = runner.invoke(main, ["run", "--config", str(config),
                                      "--json"])
        assert result.exit_code == EXIT_OK, result.output
        payload = json.loads(result.output)
        assert payload["exchanges"] == 2 * 2 * 2
        out = Path(payload["output_dir"])
        assert (out / "transcript.jsonl").exists()
        assert (out / "metrics.csv").exists()

    def test_run_rejects_mismatched_rerun(self, runner, tmp_path):
        config = write_config(tmp_path)
        assert runner.invoke(main, ["run", "--config", str(config)]
                             ).exit_code == EXIT_OK
        changed = write_config(tmp_path, seed=42)
        result = runner.invoke(main, ["run", "--config", str(changed)])
        assert result.exit_code == EXIT_CONFIG
        assert "different config" in result.output

    def test_resume_completed_run(self, runner, tmp_path):
        config = write_config(tmp_path)
        runner.invoke(main, ["run", "--config", str(config)])
        result = runner.invoke(main, ["resume", str(tmp_path / "out"),
                                      "--json"])
        assert result.exit_code == EXIT_OK
        assert json.loads(result.output)["exchanges"] == 8

    def test_resume_without_snapshot_exits_two(self, runner, tmp_path):
        (tmp_path / "empty").mkdir()
        result = runner.invoke(main, ["resume", str(tmp_path / "empty")])
        assert result.exit_code == EXIT_CONFIG

    def test_score_transcript(self, runner, tmp_path):
        config = write_config(tmp_path)
        runner.invoke(main, ["run", "--config", str(config)])
        transcript = tmp_path / "out" / "transcript.jsonl"
        result = runner.invoke(main, ["score", str(transcript), "--json"])
        assert result.exit_code == EXIT_OK
        payload = json.loads(result.output)
        assert payload["exchanges"] == 8
        assert payload["verdict_mismatches"] == []
        assert set(payload["aps"]) == {"alpha", "beta"}

    def test_score_flags_mismatches_under_other_params(self, runner, tmp_path):
        config = write_config(tmp_path)
        runner.invoke(main, ["run", "--config", str(config)])
        transcript = tmp_path / "out" / "transcript.jsonl"
        # A different tau reclassifies at least one verdict in this run.
        result = runner.invoke(main, ["score", str(transcript),
                                      "--tau", "0.9", "--json"])
        payload = json.loads(result.output)
        if payload["verdict_mismatches"]:
            assert result.exit_code == EXIT_VALIDATION
        else:
            assert result.exit_code == EXIT_OK

    def test_embed_writes_matrix(self, runner, tmp_path):
        config = write_config(tmp_path)
        runner.invoke(main, ["run", "--config", str(config)])
        result = runner.invoke(main, ["embed", str(tmp_path / "out"),
                                      "--encoder", "8", "--json"])
        assert result.exit_code == EXIT_OK
        payload = json.loads(result.output)
        assert payload["dimension"] == 91
        assert payload["rows"] == 2 * 3  # two agents, rounds 0-2
        header = Path(payload["path"]).read_text().splitlines()[0]
        assert header.split(",")[:2] == ["agent", "round"]

    def test_embed_needs_artifact_dir(self, runner, tmp_path):
        (tmp_path / "notrun").mkdir()
        result = runner.invoke(main, ["embed", str(tmp_path / "notrun")])
        assert result.exit_code == EXIT_CONFIG


class TestConfigErrors:
    def test_scripted_requires_preloaded_beliefs(self, runner, tmp_path):
        config = write_config(tmp_path, council=[
            {"agent_id": "alpha", "persona": "empiricist"},
            {"agent_id": "beta", "persona": "skeptic"},
        ])
        result = runner.invoke(main, ["run", "--config", str(config)])
        assert result.exit_code == EXIT_CONFIG

    def test_unknown_backend_kind(self, runner, tmp_path):
        config = write_config(tmp_path, backend={"kind": "psychic"})
        result = runner.invoke(main, ["run", "--config", str(config)])
        assert result.exit_code == EXIT_CONFIG

    def test_unreadable_config(self, runner, tmp_path):
        path = tmp_path / "config.json"
        path.write_text("{")
        result = runner.invoke(main, ["run", "--config", str(path)])
        assert result.exit_code == EXIT_CONFIG

    def test_bad_weights(self, runner, tmp_path):
        config = write_config(tmp_path,
                              adjudicator={"w_logic": 0.9, "w_ethics": 0.9})
        result = runner.invoke(main, ["run", "--config", str(config)])
        assert result.exit_code == EXIT_CONFIG

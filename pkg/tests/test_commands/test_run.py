"""Tests for the run command."""

import json
from io import StringIO
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd
import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from xlmimo.api import run_experiment_data
from xlmimo.rl import load_checkpoint
from xlmimo.trainers import FullPowerPolicy, PowerControlEnv
from xlmimo.utils import NumericalFailureError


def _write(path: Path, data: Any) -> Path:
    path.write_text(json.dumps(data), encoding="utf8")
    return path


def _document(output_dir: Path, **overrides: Any) -> dict[str, Any]:
    data: dict[str, Any] = {
        "network": {"num_bs": 4, "num_ue": 3, "p_max": 0.2},
        "method": "full_power",
        "combiner": "mr",
        "episodes": 1,
        "seed": 0,
        "output_dir": str(output_dir),
    }
    data.update(overrides)
    return data


def test_full_power_run(tmp_path: Path) -> None:
    """
    One episode of the full-power baseline writes every artifact.
    """
    out = tmp_path / "run"
    stdout = StringIO()

    call_command("run", str(_write(tmp_path / "config.json", _document(out))), stdout=stdout)

    frame = pd.read_csv(out / "log.csv")
    assert len(frame) == 1
    assert frame.columns.tolist() == ["episode", "sum_se", "se_ue0", "se_ue1", "se_ue2", "power_watts"]
    assert frame["power_watts"][0] == pytest.approx(0.6)
    assert frame["sum_se"][0] == pytest.approx(frame[["se_ue0", "se_ue1", "se_ue2"]].sum(axis=1)[0])
    assert pd.read_csv(out / "timings.csv").columns.tolist() == ["episode", "wall_ms"]
    assert len(pd.read_csv(out / "evaluation.csv")) == 2
    assert load_checkpoint(out / "checkpoint.npz") == {}
    summary = json.loads((out / "summary.json").read_text(encoding="utf8"))
    assert summary["status"] == "completed"
    assert summary["completed_episodes"] == 1
    assert "Experiment finished" in stdout.getvalue()


def test_rerun_is_byte_identical(tmp_path: Path) -> None:
    config = {"method": "fl_ctce", "episodes": 3, "hyper": {"batch_size": 2, "buffer_capacity": 20}}
    first = run_experiment_data(_document(tmp_path / "a", **config))
    second = run_experiment_data(_document(tmp_path / "b", **config))

    for name in ("log.csv", "evaluation.csv"):
        assert (first.output_dir / name).read_bytes() == (second.output_dir / name).read_bytes()
    first_state = load_checkpoint(first.output_dir / "checkpoint.npz")
    second_state = load_checkpoint(second.output_dir / "checkpoint.npz")
    assert sorted(first_state) == sorted(second_state)
    for key, value in first_state.items():
        np.testing.assert_array_equal(value, second_state[key])


def test_summary_config_reproduces_the_run(tmp_path: Path) -> None:
    first = run_experiment_data(_document(tmp_path / "a", method="random_power", episodes=2))
    echoed = dict(first.summary["config"], output_dir=str(tmp_path / "b"))

    second = run_experiment_data(echoed)

    assert (first.output_dir / "log.csv").read_bytes() == (second.output_dir / "log.csv").read_bytes()


def test_relative_output_dir_goes_under_root(tmp_path: Path, small_run_settings: Path) -> None:
    result = run_experiment_data(_document(Path("nested/run")))

    assert result.output_dir == small_run_settings / "nested" / "run"
    assert (result.output_dir / "summary.json").exists()


def test_grid_oracle_in_summary(tmp_path: Path) -> None:
    result = run_experiment_data(_document(tmp_path / "run", evaluation={"grid_levels": 2}))

    assert result.summary["oracle_mean_sum_se"] >= result.summary["evaluation_mean_sum_se"] - 1e-12


def test_evaluation_can_be_skipped(tmp_path: Path) -> None:
    result = run_experiment_data(_document(tmp_path / "run", evaluation={"layouts": 0}))

    assert not (result.output_dir / "evaluation.csv").exists()
    assert "evaluation_mean_sum_se" not in result.summary


def test_missing_p_max_exits_with_2(tmp_path: Path) -> None:
    data = _document(tmp_path / "run", network={"num_bs": 4, "num_ue": 3})

    with pytest.raises(CommandError, match="p_max") as error:
        call_command("run", str(_write(tmp_path / "config.json", data)))

    assert error.value.returncode == 2


def test_unknown_key_exits_with_2(tmp_path: Path) -> None:
    data = _document(tmp_path / "run", episodez=3)

    with pytest.raises(CommandError, match="episodez") as error:
        call_command("run", str(_write(tmp_path / "config.json", data)))

    assert error.value.returncode == 2


@pytest.mark.parametrize("content", ["{not json", "[1, 2]"])
def test_malformed_document_exits_with_2(tmp_path: Path, content: str) -> None:
    path = tmp_path / "config.json"
    path.write_text(content, encoding="utf8")

    with pytest.raises(CommandError) as error:
        call_command("run", str(path))

    assert error.value.returncode == 2


def test_missing_file_exits_with_2(tmp_path: Path) -> None:
    with pytest.raises(CommandError) as error:
        call_command("run", str(tmp_path / "absent.json"))

    assert error.value.returncode == 2


def test_numerical_failure_keeps_partial_log(
    tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> None:
    """
    A failing step in the second episode exits with 3 after writing episode 0.
    """
    original_step = PowerControlEnv.step
    calls = {"count": 0}

    def failing_step(self: PowerControlEnv, powers: Any) -> Any:
        calls["count"] += 1
        if calls["count"] > 2:
            raise NumericalFailureError("Psi became singular")
        return original_step(self, powers)

    monkeypatch.setattr(PowerControlEnv, "step", failing_step)
    out = tmp_path / "run"

    with pytest.raises(CommandError, match="Numerical failure") as error:
        call_command("run", str(_write(tmp_path / "config.json", _document(out, episodes=5))))

    assert error.value.returncode == 3
    assert len(pd.read_csv(out / "log.csv")) == 1
    summary = json.loads((out / "summary.json").read_text(encoding="utf8"))
    assert summary["status"] == "failed"
    assert summary["completed_episodes"] == 1
    assert not (out / "checkpoint.npz").exists()


def test_non_finite_policy_output_exits_with_3(
    tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> None:
    """A policy that starts emitting NaN in episode 1 still leaves episode 0 on disk."""
    original_act = FullPowerPolicy.act
    calls = {"count": 0}

    def nan_act(self: FullPowerPolicy, observations: Any, noise_scale: float) -> Any:
        calls["count"] += 1
        actions = original_act(self, observations, noise_scale)
        return actions if calls["count"] <= 2 else np.full_like(actions, np.nan)

    monkeypatch.setattr(FullPowerPolicy, "act", nan_act)
    out = tmp_path / "run"

    with pytest.raises(CommandError, match="non-finite") as error:
        call_command("run", str(_write(tmp_path / "config.json", _document(out, episodes=4))))

    assert error.value.returncode == 3
    assert len(pd.read_csv(out / "log.csv")) == 1
    summary = json.loads((out / "summary.json").read_text(encoding="utf8"))
    assert summary["status"] == "failed"

"""Tests for the bench command."""

import json
from io import StringIO
from pathlib import Path

import pandas as pd
import pytest
from django.core.management import call_command

from xlmimo.api import bench_runtime
from xlmimo.api.reproduce import SCALES


def _config(tmp_path: Path) -> Path:
    path = tmp_path / "config.json"
    path.write_text(
        json.dumps({"network": {"num_bs": 4, "num_ue": 3, "p_max": 0.2}, "seed": 1, "episodes": 50}),
        encoding="utf8",
    )
    return path


def test_every_method_and_combiner(tmp_path: Path) -> None:
    out = tmp_path / "runtime.csv"

    call_command("bench", str(_config(tmp_path)), episodes=1, out=str(out), stdout=StringIO())

    table = pd.read_csv(out)
    assert table.columns.tolist() == ["method", "combiner", "episodes", "mean_wall_ms"]
    assert len(table) == 6
    assert set(zip(table["method"], table["combiner"])) == {
        (method, combiner)
        for method in ("fl_ctce", "fl_ctde", "maddpg")
        for combiner in ("mr", "lmmse")
    }
    assert (table["episodes"] == 1).all()
    assert (table["mean_wall_ms"] > 0).all()


def test_selected_methods(tmp_path: Path) -> None:
    table = bench_runtime(_config(tmp_path), episodes=2, methods=["maddpg"], combiners=["mr"])

    assert table.values.tolist()[0][:3] == ["maddpg", "mr", 2]


@pytest.mark.slow
def test_runtime_ordering_at_full_scale() -> None:
    """
    Nine BSs and six UEs over 50 episodes: FL-CTDE <= FL-CTCE <= MADDPG per
    episode with 10% slack, and L-MMSE is slower than MR for every method.
    """
    scale = SCALES["paper"]
    document = {
        "network": dict(scale["network"]),
        "fuzzy": dict(scale["fuzzy"]),
        "training": {"n_mc": 20, "steps_per_episode": 10},
        "seed": 0,
        "episodes": 50,
    }

    table = bench_runtime(document)

    wall = table.set_index(["method", "combiner"])["mean_wall_ms"]
    for combiner in ("mr", "lmmse"):
        assert wall["fl_ctde", combiner] <= 1.1 * wall["fl_ctce", combiner]
        assert wall["fl_ctce", combiner] <= 1.1 * wall["maddpg", combiner]
        # Six UE agents against three fuzzy agents.
        assert 1.1 * wall["maddpg", combiner] >= wall["fl_ctde", combiner]
    for method in ("fl_ctce", "fl_ctde", "maddpg"):
        assert wall[method, "lmmse"] > wall[method, "mr"]

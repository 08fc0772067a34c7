"""
API for regenerating every comparison table: SE CDFs, power traces and runtimes.
"""

import logging
from pathlib import Path
from typing import Any, Optional, Union

import pandas as pd

from xlmimo.api.bench import RUNTIME_COLUMNS, runtime_row
from xlmimo.api.cdf import emit_cdf
from xlmimo.api.experiments import ExperimentResult, run_experiment_data
from xlmimo.constants import COMBINERS, EVALUATION_FILENAME, LOG_FILENAME, METHODS
from xlmimo.trainers.log import FLOAT_FORMAT
from xlmimo.utils import ExperimentRequestError

log = logging.getLogger(__name__)

POWER_TRACES_FILENAME = "power_traces.csv"
RUNTIME_FILENAME = "runtime.csv"

SCALES: dict[str, dict[str, Any]] = {
    "desk": {
        "network": {
            "num_bs": 4,
            "num_ue": 3,
            "n_hr": 4,
            "n_vr": 4,
            "n_hs": 2,
            "n_vs": 2,
            "p_max": 0.2,
        },
        "fuzzy": {"m": 2},
        "episodes": 2000,
    },
    "paper": {
        "network": {
            "num_bs": 9,
            "num_ue": 6,
            "n_hr": 9,
            "n_vr": 9,
            "n_hs": 3,
            "n_vs": 3,
            "delta_r": 1 / 3,
            "delta_s": 1 / 3,
            "p_max": 0.2,
        },
        "fuzzy": {"m": 3},
        "episodes": 2000,
    },
}


def run_name(method: str, combiner: str) -> str:
    return f"{method}_{combiner}"


def reproduce_paper(
    scale: str,
    out: Union[str, Path],
    episodes: Optional[int] = None,
    seed: int = 0,
    evaluation: Optional[dict[str, Any]] = None,
) -> dict[str, ExperimentResult]:
    """
    Run every method with every combiner and emit the comparison tables.

    ``out`` receives one directory per run, ``cdf_<method>_<combiner>.csv``
    for each run, ``power_traces.csv`` (one column per run) and
    ``runtime.csv``.

    Args:
        scale (str): "desk" or "paper".
        out (str | Path): Output directory.
        episodes (int | None): Overrides the scale's episode count.
        seed (int): Master seed shared by all runs.
        evaluation (dict | None): Evaluation section passed to every run.

    Returns:
        dict: Results keyed by run name.
    """
    if scale not in SCALES:
        raise ExperimentRequestError(f"Unknown scale: {scale}; choose from {sorted(SCALES)}")
    out = Path(out).absolute()
    base = SCALES[scale]
    results: dict[str, ExperimentResult] = {}
    traces: dict[str, Any] = {}
    runtimes = []
    for method in METHODS:
        for combiner in COMBINERS:
            name = run_name(method, combiner)
            data: dict[str, Any] = {
                "network": dict(base["network"]),
                "fuzzy": dict(base["fuzzy"]),
                "method": method,
                "combiner": combiner,
                "episodes": base["episodes"] if episodes is None else episodes,
                "seed": seed,
                "output_dir": str(out / name),
            }
            if evaluation is not None:
                data["evaluation"] = dict(evaluation)
            result = run_experiment_data(data)
            results[name] = result
            traces[name] = result.log.power_watts
            runtimes.append(runtime_row(method, combiner, result.log.wall_ms.tolist()))
            source = result.output_dir / EVALUATION_FILENAME
            if not source.exists():
                source = result.output_dir / LOG_FILENAME
            if result.log.records or source.name == EVALUATION_FILENAME:
                emit_cdf([source], out / f"cdf_{name}.csv")

    power_traces = pd.DataFrame(traces)
    power_traces.insert(0, "episode", range(len(power_traces)))
    power_traces.to_csv(out / POWER_TRACES_FILENAME, index=False, float_format=FLOAT_FORMAT)
    pd.DataFrame(runtimes, columns=RUNTIME_COLUMNS).to_csv(
        out / RUNTIME_FILENAME, index=False, float_format=FLOAT_FORMAT
    )
    log.info("Reproduced %d runs at %s scale into %s", len(results), scale, out)
    return results

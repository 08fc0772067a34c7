"""
API for per-episode runtime comparisons.
"""

import logging
from pathlib import Path
from typing import Any, Optional, Sequence, Union

import numpy as np
import pandas as pd

from xlmimo.api.experiments import (
    build_environment,
    build_experiment_trainer,
    load_experiment,
    validate_experiment,
)
from xlmimo.constants import COMBINERS, LEARNED_METHODS
from xlmimo.trainers.log import FLOAT_FORMAT

log = logging.getLogger(__name__)

RUNTIME_COLUMNS = ["method", "combiner", "episodes", "mean_wall_ms"]


def runtime_row(method: str, combiner: str, wall_ms: Sequence[float]) -> list[Any]:
    return [method, combiner, len(wall_ms), float(np.mean(wall_ms)) if len(wall_ms) else float("nan")]


def bench_runtime(
    config: Union[str, Path, dict[str, Any]],
    episodes: Optional[int] = None,
    methods: Sequence[str] = LEARNED_METHODS,
    combiners: Sequence[str] = COMBINERS,
    out: Optional[Union[str, Path]] = None,
) -> pd.DataFrame:
    """
    Mean wall time per episode of every method and combiner on one network.

    The method and combiner of the document are overridden; everything else,
    the seed included, is shared so the runs differ only in the algorithm.

    Returns:
        pd.DataFrame: Columns method, combiner, episodes, mean_wall_ms.
    """
    data = load_experiment(config) if isinstance(config, (str, Path)) else dict(config)
    rows = []
    for method in methods:
        for combiner in combiners:
            run = {**data, "method": method, "combiner": combiner}
            if episodes is not None:
                run["episodes"] = episodes
            resolved = validate_experiment(run)
            trainer = build_experiment_trainer(resolved, build_environment(resolved))
            training_log = trainer.train(resolved["episodes"])
            rows.append(runtime_row(method, combiner, training_log.wall_ms.tolist()))
            log.info("%s/%s: %.2f ms per episode", method, combiner, rows[-1][-1])
    table = pd.DataFrame(rows, columns=RUNTIME_COLUMNS)
    if out is not None:
        out = Path(out)
        out.parent.mkdir(parents=True, exist_ok=True)
        table.to_csv(out, index=False, float_format=FLOAT_FORMAT)
    return table

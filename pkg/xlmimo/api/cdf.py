"""
API for empirical CDF tables.
"""

import logging
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np
import pandas as pd

from xlmimo.trainers.log import FLOAT_FORMAT
from xlmimo.utils import ExperimentRequestError

log = logging.getLogger(__name__)

CDF_COLUMNS = ["sum_se", "cdf"]


def empirical_cdf(values: Sequence[float]) -> pd.DataFrame:
    """
    Sorted values with ordinates i / n, i = 1..n.

    Raises:
        ExperimentRequestError: On an empty input.
    """
    ordered = np.sort(np.asarray(values, dtype=float))
    if ordered.size == 0:
        raise ExperimentRequestError("No sum-SE values to build a CDF from")
    ordinates = np.arange(1, ordered.size + 1) / ordered.size
    return pd.DataFrame({"sum_se": ordered, "cdf": ordinates}, columns=CDF_COLUMNS)


def emit_cdf(
    paths: Sequence[Union[str, Path]], out: Optional[Union[str, Path]] = None
) -> pd.DataFrame:
    """
    Empirical CDF of the sum-SE column over the union of the given logs.

    Accepts evaluation logs and training logs alike; both carry ``sum_se``.

    Args:
        paths (Sequence): CSV files to merge.
        out (str | Path | None): Where to write the table, if anywhere.

    Returns:
        pd.DataFrame: Columns sum_se, cdf.
    """
    if not paths:
        raise ExperimentRequestError("At least one log file is required")
    values = []
    for path in paths:
        try:
            frame = pd.read_csv(path)
        except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as error:
            raise ExperimentRequestError(f"Cannot read {path}: {error}") from error
        if "sum_se" not in frame.columns:
            raise ExperimentRequestError(f"{path} has no sum_se column")
        values.append(frame["sum_se"].to_numpy(dtype=float))
    table = empirical_cdf(np.concatenate(values))
    if out is not None:
        out = Path(out)
        out.parent.mkdir(parents=True, exist_ok=True)
        table.to_csv(out, index=False, float_format=FLOAT_FORMAT)
        log.info("CDF of %d values written to %s", len(table), out)
    return table

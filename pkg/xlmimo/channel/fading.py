"""
Large-scale fading: distance pathloss with shadowing on a wrap-around square.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from xlmimo.channel.config import NetworkConfig
from xlmimo.channel.layout import NetworkLayout
from xlmimo.constants import PATHLOSS_INTERCEPT_DB, PATHLOSS_SLOPE_DB
from xlmimo.utils import FloatArray, db_to_linear, linear_to_db

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LSFMatrix:
    """
    Linear-scale large-scale fading coefficients beta_mk, shape (M, K).
    """

    beta: FloatArray

    def __post_init__(self) -> None:
        if not np.all(np.isfinite(self.beta)) or np.any(self.beta <= 0):
            raise ValueError("LSF coefficients must be finite and positive")

    @property
    def beta_db(self) -> FloatArray:
        return linear_to_db(self.beta)  # type: ignore[no-any-return]


def wraparound_distances(layout: NetworkLayout, area_side: float) -> FloatArray:
    """
    Horizontal BS-UE distances under wrap-around.

    Positions are first folded into the square; each UE is then replicated
    at the 9 translations of the square by
    {-1, 0, 1} * area_side along x and y; the nearest image counts.

    Returns:
        FloatArray: (M, K) minimum 2-D distances in meters.
    """
    shifts = np.array([(dx, dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1)]) * area_side
    ue = np.mod(layout.ue_positions[:, :2], area_side)
    bs = np.mod(layout.bs_positions[:, :2], area_side)
    diff = ue[None, :, None, :] + shifts[None, None, :, :] - bs[:, None, None, :]
    return np.min(np.linalg.norm(diff, axis=-1), axis=-1)  # type: ignore[no-any-return]


def pathloss_db(distance: FloatArray) -> FloatArray:
    """Median pathloss in dB for 3-D distances in meters."""
    return PATHLOSS_INTERCEPT_DB - PATHLOSS_SLOPE_DB * np.log10(distance)  # type: ignore[no-any-return]


def large_scale_fading(
    layout: NetworkLayout,
    config: NetworkConfig,
    rng: Optional[np.random.Generator],
) -> LSFMatrix:
    """
    Draw the LSF matrix of a layout.

    beta_mk[dB] = -30.5 - 36.7 log10(d_mk / 1 m) + F_mk with F_mk ~ N(0, std^2),
    where d_mk includes the BS-UE height gap.

    Args:
        layout (NetworkLayout): BS and UE positions.
        config (NetworkConfig): Provides area side, height gap and shadowing std.
        rng (np.random.Generator | None): Shadowing source; None disables shadowing.

    Returns:
        LSFMatrix: Linear-scale coefficients.
    """
    d_2d = wraparound_distances(layout, config.area_side)
    distance = np.sqrt(d_2d**2 + config.bs_ue_height_gap**2)
    # d >= 1 m keeps the formula inside its fitted range when the gap is tiny
    distance = np.maximum(distance, 1.0)
    beta_db = pathloss_db(distance)
    if rng is not None and config.shadowing_std_db > 0:
        beta_db = beta_db + rng.normal(0.0, config.shadowing_std_db, size=beta_db.shape)
    return LSFMatrix(beta=db_to_linear(beta_db))

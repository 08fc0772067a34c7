"""
Frozen-policy evaluation on a fixed set of drops.
"""

import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np
import pandas as pd

from xlmimo.channel import ChannelSet, LSFMatrix, NetworkLayout, large_scale_fading, redraw_ues
from xlmimo.trainers.environment import PowerControlEnv, action_to_power, build_observations
from xlmimo.utils import FloatArray

log = logging.getLogger(__name__)

Policy = Callable[[FloatArray], FloatArray]

EVALUATION_COLUMNS = ["layout", "sum_se", "power_watts"]


@dataclass(frozen=True)
class EvaluationDrop:
    """
    One frozen UE drop with its channel batch.

    Attributes:
        layout (NetworkLayout): BS and UE positions.
        lsf (LSFMatrix): LSF of the drop.
        channels (ChannelSet): Realizations every policy is scored on.
    """

    layout: NetworkLayout
    lsf: LSFMatrix
    channels: ChannelSet

    @property
    def observations(self) -> FloatArray:
        return build_observations(self.lsf)


def build_evaluation_set(
    env: PowerControlEnv, layouts: int, n_mc: int, rng: np.random.Generator
) -> list[EvaluationDrop]:
    """
    Draw fresh UE drops on the environment's BS deployment.

    Args:
        env (PowerControlEnv): Provides the BSs, arrays and spectral profile.
        layouts (int): Number of drops.
        n_mc (int): Realizations per drop.
        rng (np.random.Generator): The evaluation stream, independent of training.

    Returns:
        list[EvaluationDrop]: The frozen drops.
    """
    if layouts < 1:
        raise ValueError("layouts must be at least 1")
    drops = []
    for _ in range(layouts):
        layout = redraw_ues(env.layout, env.config, rng)
        lsf = large_scale_fading(layout, env.config, rng)
        channels = env.draw_channels(lsf=lsf, n_mc=n_mc, rng=rng)
        drops.append(EvaluationDrop(layout=layout, lsf=lsf, channels=channels))
    return drops


def evaluate_policy(
    policy: Policy,
    env: PowerControlEnv,
    drops: list[EvaluationDrop],
    action_floor: float = 0.0,
) -> pd.DataFrame:
    """
    Score a frozen policy on every drop.

    Returns:
        pd.DataFrame: One row per drop with columns layout, sum_se, power_watts.
    """
    rows = []
    for index, drop in enumerate(drops):
        powers = action_to_power(policy(drop.observations), env.config, action_floor)
        stats = env.evaluate_powers(drop.channels, powers)
        rows.append([index, stats.sum_se, powers.total_watts])
    frame = pd.DataFrame(rows, columns=EVALUATION_COLUMNS)
    log.info(
        "Evaluated %d drops: mean sum-SE %.3f", len(frame), frame["sum_se"].mean()
    )
    return frame

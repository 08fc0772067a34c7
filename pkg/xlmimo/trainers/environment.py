"""
Uplink power-control environment.

The state of UE k is its normalized log-scale LSF towards the M BSs. An
action in [0, 1] per UE scales the per-antenna power up to P_max / N_s. A
step estimates the SE of the allocation on fresh small-scale realizations,
then redraws the UE positions and their LSF ("env update").
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from xlmimo.channel import (
    ChannelSet,
    LSFMatrix,
    NetworkConfig,
    NetworkLayout,
    SpectralProfile,
    build_spectral_profile,
    draw_channels,
    large_scale_fading,
    place_network,
    redraw_ues,
)
from xlmimo.constants import (
    COMBINERS,
    OBSERVATION_CLIP,
    OBSERVATION_OFFSET_DB,
    OBSERVATION_SCALE_DB,
    REWARDS,
)
from xlmimo.receivers import PowerAllocation, SeStatistics, build_combiners, estimate_se, per_antenna_cap
from xlmimo.utils import FloatArray, NumericalFailureError

log = logging.getLogger(__name__)


def build_observations(lsf: LSFMatrix) -> FloatArray:
    """
    s_k[j] = clip((beta_dB[j, k] + 90) / 30, -3, 3).

    Returns:
        FloatArray: (K, M) observations, one row per UE.
    """
    normalized = (lsf.beta_db.T + OBSERVATION_OFFSET_DB) / OBSERVATION_SCALE_DB
    return np.clip(normalized, -OBSERVATION_CLIP, OBSERVATION_CLIP)  # type: ignore[no-any-return]


def action_to_power(
    actions: FloatArray, config: NetworkConfig, action_floor: float = 0.0
) -> PowerAllocation:
    """
    p_k = max(a_k, action_floor) * P_max / N_s.

    Actions are clipped into [0, 1] first, so N_s p_k <= P_max always holds.
    Non-finite actions raise NumericalFailureError.
    """
    a = np.asarray(actions, dtype=float).reshape(-1)
    if not np.all(np.isfinite(a)):
        log.error("Non-finite actions: %s", a)
        raise NumericalFailureError(f"policy produced non-finite actions: {a}")
    a = np.clip(a, 0.0, 1.0)
    a = np.maximum(a, action_floor)
    cap = per_antenna_cap(config.p_max, config.n_s)
    return PowerAllocation(p=a * cap, n_s=config.n_s, p_max=config.p_max)


@dataclass(frozen=True)
class StepResult:
    """
    Outcome of one environment step.

    Attributes:
        rewards (FloatArray): (K,) per-agent rewards.
        se (FloatArray): (K,) per-UE SE of the allocation.
        powers (PowerAllocation): The evaluated allocation.
        next_observations (FloatArray): (K, M) observations after the env update.
        regularized (bool): True if any Psi_k needed diagonal loading.
    """

    rewards: FloatArray
    se: FloatArray
    powers: PowerAllocation
    next_observations: FloatArray
    regularized: bool = False

    @property
    def sum_se(self) -> float:
        return float(np.sum(self.se))


class PowerControlEnv:
    """
    Cell-free XL-MIMO uplink seen by the power-control agents.

    Attributes:
        config (NetworkConfig): The network.
        combiner (str): "mr" or "lmmse".
        n_mc (int): Realizations per SE estimate.
        reward (str): "sum_se" (shared) or "per_ue_se".
    """

    def __init__(
        self,
        config: NetworkConfig,
        combiner: str,
        n_mc: int,
        layout_rng: np.random.Generator,
        channel_rng: np.random.Generator,
        reward: str = "sum_se",
    ) -> None:
        if combiner not in COMBINERS:
            raise ValueError(f"Unknown combiner: {combiner}")
        if reward not in REWARDS:
            raise ValueError(f"Unknown reward: {reward}")
        if n_mc < 1:
            raise ValueError("n_mc must be at least 1")
        self.config = config
        self.combiner = combiner
        self.n_mc = n_mc
        self.reward = reward
        self.layout_rng = layout_rng
        self.channel_rng = channel_rng
        self.layout: NetworkLayout = place_network(config, layout_rng)
        self.profile: SpectralProfile = build_spectral_profile(self.layout, config)
        self.lsf: LSFMatrix = large_scale_fading(self.layout, config, layout_rng)

    @property
    def num_ue(self) -> int:
        return self.config.num_ue

    @property
    def observation_size(self) -> int:
        return self.config.num_bs

    def observations(self) -> FloatArray:
        return build_observations(self.lsf)

    def reset(self) -> FloatArray:
        """Draw a new UE drop and return its observations."""
        self._redraw()
        return self.observations()

    def draw_channels(
        self,
        lsf: Optional[LSFMatrix] = None,
        n_mc: Optional[int] = None,
        rng: Optional[np.random.Generator] = None,
    ) -> ChannelSet:
        return draw_channels(
            lsf if lsf is not None else self.lsf,
            self.profile,
            self.layout,
            n_mc or self.n_mc,
            rng if rng is not None else self.channel_rng,
        )

    def evaluate_powers(self, channels: ChannelSet, powers: PowerAllocation) -> SeStatistics:
        """SE of an allocation on a given channel batch with this env's combiner."""
        combiners = build_combiners(self.combiner, channels, powers, self.config.noise_power)
        return estimate_se(channels, combiners, powers, self.config.noise_power)

    def rewards_from(self, se: FloatArray) -> FloatArray:
        if self.reward == "sum_se":
            return np.full(se.shape, float(np.sum(se)))
        return se.copy()

    def step(self, powers: PowerAllocation) -> StepResult:
        """
        Evaluate an allocation on the current drop, then move to the next drop.
        """
        stats = self.evaluate_powers(self.draw_channels(), powers)
        rewards = self.rewards_from(stats.se)
        log.debug("Step rewards %s at %.4f W", rewards, powers.total_watts)
        self._redraw()
        return StepResult(
            rewards=rewards,
            se=stats.se,
            powers=powers,
            next_observations=self.observations(),
            regularized=bool(stats.regularized.any()),
        )

    def _redraw(self) -> None:
        self.layout = redraw_ues(self.layout, self.config, self.layout_rng)
        self.lsf = large_scale_fading(self.layout, self.config, self.layout_rng)

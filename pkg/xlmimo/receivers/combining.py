"""
Receive combining matrices built locally at every BS.
"""

import logging
from dataclasses import dataclass

import numpy as np

from xlmimo.channel.small_scale import ChannelSet
from xlmimo.receivers.power import PowerAllocation
from xlmimo.utils import ComplexArray, NumericalFailureError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CombinerSet:
    """
    Combining matrices V_mk for every realization of a channel batch.

    Attributes:
        combiners (ComplexArray): (N_mc, M, K, N_r, N_s), aligned with the channel batch.
        valid (np.ndarray): (N_mc,) bool mask; False marks a rejected realization.
    """

    combiners: ComplexArray
    valid: np.ndarray

    @property
    def rejected(self) -> int:
        return int(np.count_nonzero(~self.valid))


def _finite_realizations(gains: ComplexArray) -> np.ndarray:
    return np.all(np.isfinite(gains.reshape(gains.shape[0], -1)), axis=1)  # type: ignore[no-any-return]


def mr_combining(channels: ChannelSet) -> CombinerSet:
    """
    Maximum-ratio combining, V_mk = G_mk.
    """
    return CombinerSet(
        combiners=channels.gains.copy(), valid=_finite_realizations(channels.gains)
    )


def lmmse_combining(
    channels: ChannelSet, powers: PowerAllocation, noise_power: float
) -> CombinerSet:
    """
    Local MMSE combining.

    V_mk = p_k (sum_l p_l G_ml G_ml^H + sigma^2 I)^-1 G_mk, evaluated with one
    linear solve per BS and realization for all UEs at once.

    Args:
        channels (ChannelSet): The channel batch.
        powers (PowerAllocation): Per-antenna powers.
        noise_power (float): sigma^2 in watts, must be positive.

    Returns:
        CombinerSet: The combiners; non-finite realizations are rejected.

    Raises:
        NumericalFailureError: If no realization can be solved.
    """
    if noise_power <= 0:
        raise ValueError("noise_power must be positive")
    gains = channels.gains
    n_mc, num_bs, num_ue, n_r, n_s = gains.shape
    valid = _finite_realizations(gains)
    combiners = np.zeros_like(gains)
    if not valid.any():
        raise NumericalFailureError("every channel realization is non-finite")
    if not valid.all():
        log.warning(
            "Rejected %d non-finite channel realizations out of %d",
            n_mc - int(valid.sum()),
            n_mc,
        )

    good = gains[valid]
    p = powers.p
    # (T, M, N_r, K * N_s)
    stacked = np.transpose(good, (0, 1, 3, 2, 4)).reshape(good.shape[0], num_bs, n_r, num_ue * n_s)
    weights = np.repeat(p, n_s)
    covariance = (stacked * weights) @ np.conj(np.swapaxes(stacked, -1, -2))
    covariance = covariance + noise_power * np.eye(n_r)
    try:
        solved = np.linalg.solve(covariance, stacked * weights)
    except np.linalg.LinAlgError as error:
        raise NumericalFailureError(f"L-MMSE solve failed: {error}") from error
    combiners[valid] = np.transpose(
        solved.reshape(good.shape[0], num_bs, n_r, num_ue, n_s), (0, 1, 3, 2, 4)
    )
    return CombinerSet(combiners=combiners, valid=valid)


def build_combiners(
    kind: str, channels: ChannelSet, powers: PowerAllocation, noise_power: float
) -> CombinerSet:
    """
    Dispatch on the combiner name, "mr" or "lmmse".
    """
    if kind == "mr":
        return mr_combining(channels)
    if kind == "lmmse":
        return lmmse_combining(channels, powers, noise_power)
    raise ValueError(f"Unknown combiner: {kind}")

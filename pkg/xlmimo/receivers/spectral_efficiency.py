"""
Monte-Carlo evaluation of the uplink achievable SE with CPU averaging.

The CPU averages the M local estimates, so the effective combined channel of
UE k towards UE l is A_kl = (1/M) sum_m V_mk^H G_ml. With expectations taken
as sample means over the channel realizations:

    E_k   = sqrt(p_k) E{A_kk}
    Psi_k = sum_l p_l E{A_kl A_kl^H} - E_k E_k^H + sigma^2 / M^2 sum_m E{V_mk^H V_mk}
    SE_k  = log2 |I + E_k^H Psi_k^-1 E_k|
"""

import logging
from dataclasses import dataclass

import numpy as np

from xlmimo.channel.small_scale import ChannelSet
from xlmimo.constants import PSI_REGULARIZATION
from xlmimo.receivers.combining import CombinerSet
from xlmimo.receivers.power import PowerAllocation
from xlmimo.utils import ComplexArray, FloatArray, NumericalFailureError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeStatistics:
    """
    Per-UE SE terms.

    Attributes:
        signal (ComplexArray): (K, N_s, N_s) signal terms E_k.
        interference (ComplexArray): (K, N_s, N_s) interference-plus-noise terms Psi_k.
        se (FloatArray): (K,) achievable SE in bit/s/Hz.
        regularized (np.ndarray): (K,) bool, True where Psi_k needed diagonal loading.
    """

    signal: ComplexArray
    interference: ComplexArray
    se: FloatArray
    regularized: np.ndarray

    @property
    def sum_se(self) -> float:
        return float(np.sum(self.se))


def combined_channels(
    gains: ComplexArray, combiners: ComplexArray
) -> ComplexArray:
    """
    A[t, k, :, l, :] = (1/M) sum_m V_mk^H G_ml for every realization t.

    Returns:
        ComplexArray: (T, K, N_s, K, N_s).
    """
    n_mc, num_bs, num_ue, n_r, n_s = gains.shape
    # (T, M, N_r, K * N_s)
    g_stack = np.transpose(gains, (0, 1, 3, 2, 4)).reshape(n_mc, num_bs, n_r, num_ue * n_s)
    v_stack = np.transpose(combiners, (0, 1, 3, 2, 4)).reshape(n_mc, num_bs, n_r, num_ue * n_s)
    local = np.conj(np.swapaxes(v_stack, -1, -2)) @ g_stack
    return local.sum(axis=1).reshape(n_mc, num_ue, n_s, num_ue, n_s) / num_bs  # type: ignore[no-any-return]


def _regularize(psi: ComplexArray) -> tuple[ComplexArray, bool]:
    """Load the diagonal when Psi is not numerically positive definite."""
    n_s = psi.shape[-1]
    scale = max(float(np.real(np.trace(psi))) / n_s, np.finfo(float).tiny)
    eigenvalues = np.linalg.eigvalsh(psi)
    if eigenvalues.min() > PSI_REGULARIZATION * scale:
        return psi, False
    return psi + PSI_REGULARIZATION * scale * np.eye(n_s), True


def estimate_se(
    channels: ChannelSet,
    combiner: CombinerSet,
    powers: PowerAllocation,
    noise_power: float,
) -> SeStatistics:
    """
    Estimate the SE of every UE from a batch of realizations.

    Args:
        channels (ChannelSet): The channel batch.
        combiner (CombinerSet): Combiners aligned with the batch.
        powers (PowerAllocation): Per-antenna powers.
        noise_power (float): sigma^2 in watts.

    Returns:
        SeStatistics: Signal and interference terms and the SE per UE.

    Raises:
        NumericalFailureError: If no valid realization is left.
    """
    if combiner.combiners.shape != channels.gains.shape:
        raise ValueError("combiner is not aligned with the channel batch")
    valid = combiner.valid & np.all(
        np.isfinite(channels.gains.reshape(channels.n_mc, -1)), axis=1
    )
    if not valid.any():
        raise NumericalFailureError("no valid channel realization to estimate SE from")
    gains = channels.gains[valid]
    combiners = combiner.combiners[valid]
    n_mc, num_bs, num_ue, _, n_s = gains.shape
    p = powers.p

    combined = combined_channels(gains, combiners)
    diagonal = combined[:, np.arange(num_ue), :, np.arange(num_ue), :]  # (K, T, N_s, N_s)
    signal = np.sqrt(p)[:, None, None] * diagonal.mean(axis=1)

    weighted = (combined * np.sqrt(p)[None, None, None, :, None]).reshape(
        n_mc, num_ue, n_s, num_ue * n_s
    )
    second_moment = (weighted @ np.conj(np.swapaxes(weighted, -1, -2))).mean(axis=0)
    noise = (
        noise_power
        / num_bs**2
        * np.einsum("tmkai,tmkaj->kij", np.conj(combiners), combiners)
        / n_mc
    )
    psi = second_moment - signal @ np.conj(np.swapaxes(signal, -1, -2)) + noise
    psi = 0.5 * (psi + np.conj(np.swapaxes(psi, -1, -2)))

    se = np.zeros(num_ue)
    regularized = np.zeros(num_ue, dtype=bool)
    for k in range(num_ue):
        psi_k, regularized[k] = _regularize(psi[k])
        if regularized[k]:
            log.warning("Psi of UE %d is not positive definite; diagonal loading applied", k)
            psi[k] = psi_k
        if not np.any(signal[k]):
            continue
        gram = np.eye(n_s) + np.conj(signal[k].T) @ np.linalg.solve(psi_k, signal[k])
        sign, logdet = np.linalg.slogdet(gram)
        if not np.isfinite(logdet) or np.real(sign) <= 0:
            raise NumericalFailureError(f"SE of UE {k} is not finite")
        se[k] = max(logdet / np.log(2.0), 0.0)
    return SeStatistics(signal=signal, interference=psi, se=se, regularized=regularized)

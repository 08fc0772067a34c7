"""
Independent reference computations the tests compare against.
"""

from typing import Callable

import numpy as np


def naive_se(
    gains: np.ndarray, combiners: np.ndarray, p: np.ndarray, noise_power: float
) -> np.ndarray:
    """
    Per-UE SE with every expectation written out as explicit loops.

    Args:
        gains: (T, M, K, N_r, N_s) channel realizations.
        combiners: Combiners aligned with ``gains``.
        p: (K,) per-antenna powers.
        noise_power: sigma^2.

    Returns:
        np.ndarray: (K,) SE in bit/s/Hz.
    """
    n_mc, num_bs, num_ue, _, n_s = gains.shape
    se = np.zeros(num_ue)
    for k in range(num_ue):
        signal = np.zeros((n_s, n_s), dtype=complex)
        for t in range(n_mc):
            for m in range(num_bs):
                signal += combiners[t, m, k].conj().T @ gains[t, m, k]
        signal *= np.sqrt(p[k]) / (n_mc * num_bs)

        psi = np.zeros((n_s, n_s), dtype=complex)
        for l in range(num_ue):
            for t in range(n_mc):
                a_kl = np.zeros((n_s, n_s), dtype=complex)
                for m in range(num_bs):
                    a_kl += combiners[t, m, k].conj().T @ gains[t, m, l]
                a_kl /= num_bs
                psi += p[l] * a_kl @ a_kl.conj().T / n_mc
        psi -= signal @ signal.conj().T
        for t in range(n_mc):
            for m in range(num_bs):
                v = combiners[t, m, k]
                psi += noise_power * v.conj().T @ v / (num_bs**2 * n_mc)
        psi = 0.5 * (psi + psi.conj().T)
        gram = np.eye(n_s) + signal.conj().T @ np.linalg.inv(psi) @ signal
        se[k] = np.log2(np.real(np.linalg.det(gram)))
    return se


def finite_difference(
    loss: Callable[[], float], parameter: np.ndarray, eps: float = 1e-5
) -> np.ndarray:
    """
    Central-difference gradient of ``loss`` with respect to ``parameter``.

    ``parameter`` is perturbed in place and restored entry by entry.
    """
    grad = np.zeros_like(parameter)
    for index in np.ndindex(parameter.shape):
        original = parameter[index]
        parameter[index] = original + eps
        upper = loss()
        parameter[index] = original - eps
        lower = loss()
        parameter[index] = original
        grad[index] = (upper - lower) / (2 * eps)
    return grad


def max_relative_error(actual: np.ndarray, expected: np.ndarray) -> float:
    """Largest absolute deviation relative to the magnitude of the expected values."""
    scale = max(float(np.max(np.abs(expected))), 1e-8)
    return float(np.max(np.abs(actual - expected))) / scale

"""
Per-UE uplink power allocations.
"""

from dataclasses import dataclass

import numpy as np

from xlmimo.utils import FloatArray


def per_antenna_cap(p_max: float, n_s: int) -> float:
    """
    Largest per-antenna power c with n_s * c <= p_max in floating point.
    """
    cap = p_max / n_s
    while cap * n_s > p_max:
        cap = float(np.nextafter(cap, 0.0))
    return cap


@dataclass(frozen=True)
class PowerAllocation:
    """
    Per-antenna transmit powers p_{k,Ns}, one entry per UE.

    Attributes:
        p (FloatArray): (K,) per-antenna powers in watts.
        n_s (int): Antennas per UE.
        p_max (float): Per-UE total power cap in watts.
    """

    p: FloatArray
    n_s: int
    p_max: float

    def __post_init__(self) -> None:
        p = np.asarray(self.p, dtype=float)
        object.__setattr__(self, "p", p)
        if p.ndim != 1:
            raise ValueError("p must be a vector with one entry per UE")
        if np.any(p < 0) or not np.all(np.isfinite(p)):
            raise ValueError("powers must be finite and non-negative")
        if np.any(self.n_s * p > self.p_max):
            raise ValueError("per-UE power exceeds p_max")

    @property
    def total_per_ue(self) -> FloatArray:
        """N_s * p_k for every UE, in watts."""
        return self.n_s * self.p  # type: ignore[no-any-return]

    @property
    def total_watts(self) -> float:
        """Sum over UEs of N_s * p_k."""
        return float(np.sum(self.total_per_ue))

    @classmethod
    def full(cls, num_ue: int, n_s: int, p_max: float) -> "PowerAllocation":
        """Every UE at its cap."""
        return cls(p=np.full(num_ue, per_antenna_cap(p_max, n_s)), n_s=n_s, p_max=p_max)

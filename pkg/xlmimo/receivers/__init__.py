"""
Combining and spectral-efficiency estimation.
"""

from xlmimo.receivers.combining import (
    CombinerSet,
    build_combiners,
    lmmse_combining,
    mr_combining,
)
from xlmimo.receivers.power import PowerAllocation, per_antenna_cap
from xlmimo.receivers.spectral_efficiency import SeStatistics, combined_channels, estimate_se

__all__ = [
    "CombinerSet",
    "PowerAllocation",
    "SeStatistics",
    "build_combiners",
    "combined_channels",
    "estimate_se",
    "lmmse_combining",
    "mr_combining",
    "per_antenna_cap",
]

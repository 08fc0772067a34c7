"""
Network layouts, large-scale fading and near-field small-scale fading.
"""

from xlmimo.channel.config import NetworkConfig
from xlmimo.channel.fading import LSFMatrix, large_scale_fading, wraparound_distances
from xlmimo.channel.layout import NetworkLayout, place_network, redraw_ues
from xlmimo.channel.small_scale import (
    ChannelSet,
    SpectralProfile,
    WavenumberLattice,
    assemble_channel,
    build_spectral_profile,
    draw_channels,
    sample_small_scale,
    steering_matrix,
    wavenumber_lattice,
)

__all__ = [
    "ChannelSet",
    "LSFMatrix",
    "NetworkConfig",
    "NetworkLayout",
    "SpectralProfile",
    "WavenumberLattice",
    "assemble_channel",
    "build_spectral_profile",
    "draw_channels",
    "large_scale_fading",
    "place_network",
    "redraw_ues",
    "sample_small_scale",
    "steering_matrix",
    "wavenumber_lattice",
    "wraparound_distances",
]

"""
Placement of BSs and UEs in the wrap-around service square.
"""

from dataclasses import dataclass

import numpy as np

from xlmimo.channel.config import NetworkConfig
from xlmimo.utils import FloatArray


@dataclass(frozen=True)
class NetworkLayout:
    """
    Positions of every BS and UE, plus the per-antenna offsets of both planar arrays.

    Attributes:
        bs_positions (FloatArray): (M, 3) BS reference positions r_m in meters.
        ue_positions (FloatArray): (K, 3) UE reference positions s_k in meters.
        bs_offsets (FloatArray): (N_r, 3) antenna offsets of every BS array, row by row.
        ue_offsets (FloatArray): (N_s, 3) antenna offsets of every UE array, row by row.
    """

    bs_positions: FloatArray
    ue_positions: FloatArray
    bs_offsets: FloatArray
    ue_offsets: FloatArray

    @property
    def num_bs(self) -> int:
        return int(self.bs_positions.shape[0])

    @property
    def num_ue(self) -> int:
        return int(self.ue_positions.shape[0])


def antenna_offsets(grid_h: int, grid_v: int, spacing: float) -> FloatArray:
    """
    Element offsets of a planar array lying in the horizontal plane.

    Args:
        grid_h (int): Elements along x.
        grid_v (int): Elements along y.
        spacing (float): Element spacing in meters.

    Returns:
        FloatArray: (grid_h * grid_v, 3) offsets, indexed row by row.
    """
    rows, cols = np.meshgrid(np.arange(grid_v), np.arange(grid_h), indexing="ij")
    offsets = np.zeros((grid_h * grid_v, 3))
    offsets[:, 0] = cols.ravel() * spacing
    offsets[:, 1] = rows.ravel() * spacing
    return offsets


def place_ues(config: NetworkConfig, rng: np.random.Generator) -> FloatArray:
    """Draw K UE positions uniformly on the square at ground height."""
    positions = np.zeros((config.num_ue, 3))
    positions[:, :2] = rng.uniform(0.0, config.area_side, size=(config.num_ue, 2))
    return positions


def place_network(config: NetworkConfig, rng: np.random.Generator) -> NetworkLayout:
    """
    Place BSs on the centers of a regular grid and UEs uniformly at random.

    Args:
        config (NetworkConfig): The network description.
        rng (np.random.Generator): Source of the UE positions.

    Returns:
        NetworkLayout: The drawn layout.

    Raises:
        ValueError: If num_bs is not a perfect square and no bs_grid is set.
    """
    rows, cols = config.grid_shape()
    xs = (np.arange(cols) + 0.5) * config.area_side / cols
    ys = (np.arange(rows) + 0.5) * config.area_side / rows
    grid_y, grid_x = np.meshgrid(ys, xs, indexing="ij")
    bs_positions = np.column_stack(
        [grid_x.ravel(), grid_y.ravel(), np.full(config.num_bs, config.bs_ue_height_gap)]
    )
    return NetworkLayout(
        bs_positions=bs_positions,
        ue_positions=place_ues(config, rng),
        bs_offsets=antenna_offsets(
            config.n_hr, config.n_vr, config.delta_r * config.wavelength
        ),
        ue_offsets=antenna_offsets(
            config.n_hs, config.n_vs, config.delta_s * config.wavelength
        ),
    )


def redraw_ues(
    layout: NetworkLayout, config: NetworkConfig, rng: np.random.Generator
) -> NetworkLayout:
    """Keep the BSs and arrays of a layout, redraw the UE positions."""
    return NetworkLayout(
        bs_positions=layout.bs_positions,
        ue_positions=place_ues(config, rng),
        bs_offsets=layout.bs_offsets,
        ue_offsets=layout.ue_offsets,
    )

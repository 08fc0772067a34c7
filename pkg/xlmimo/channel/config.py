"""
Network configuration shared by the channel, receiver and trainer packages.
"""

import math
from dataclasses import asdict, dataclass
from typing import Any, Optional

from xlmimo.constants import (
    DEFAULT_ANTENNA_SPACING,
    DEFAULT_AREA_SIDE_M,
    DEFAULT_HEIGHT_GAP_M,
    DEFAULT_NOISE_POWER_W,
    DEFAULT_P_MAX_W,
    DEFAULT_WAVELENGTH,
    SHADOWING_STD_DB,
)


@dataclass(frozen=True)
class NetworkConfig:
    """
    Geometry, array sizes and power budget of a cell-free XL-MIMO network.

    Attributes:
        num_bs (int): Number of BSs, M.
        num_ue (int): Number of UEs, K.
        n_hr, n_vr (int): BS planar array dimensions, N_r = n_hr * n_vr.
        n_hs, n_vs (int): UE planar array dimensions, N_s = n_hs * n_vs.
        delta_r, delta_s (float): Antenna spacings in wavelengths, in (0, 0.5].
        wavelength (float): Carrier wavelength in meters.
        area_side (float): Side of the square service area in meters.
        bs_ue_height_gap (float): Vertical BS-UE separation in meters.
        noise_power (float): Receiver noise power in watts.
        p_max (float): Per-UE total transmit power cap in watts.
        shadowing_std_db (float): Standard deviation of the shadow fading in dB.
        bs_grid (tuple[int, int] | None): Explicit rows x cols BS grid; when
            unset the BSs form a sqrt(M) x sqrt(M) grid.
    """

    num_bs: int = 4
    num_ue: int = 3
    n_hr: int = 4
    n_vr: int = 4
    n_hs: int = 2
    n_vs: int = 2
    delta_r: float = DEFAULT_ANTENNA_SPACING
    delta_s: float = DEFAULT_ANTENNA_SPACING
    wavelength: float = DEFAULT_WAVELENGTH
    area_side: float = DEFAULT_AREA_SIDE_M
    bs_ue_height_gap: float = DEFAULT_HEIGHT_GAP_M
    noise_power: float = DEFAULT_NOISE_POWER_W
    p_max: float = DEFAULT_P_MAX_W
    shadowing_std_db: float = SHADOWING_STD_DB
    bs_grid: Optional[tuple[int, int]] = None

    def __post_init__(self) -> None:
        for name in ("num_bs", "num_ue", "n_hr", "n_vr", "n_hs", "n_vs"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")
        for name in ("delta_r", "delta_s"):
            spacing = getattr(self, name)
            if not 0.0 < spacing <= 0.5:
                raise ValueError(f"{name} must lie in (0, 0.5] wavelengths")
        for name in ("wavelength", "area_side", "p_max", "noise_power"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.bs_ue_height_gap < 0 or self.shadowing_std_db < 0:
            raise ValueError("bs_ue_height_gap and shadowing_std_db must be non-negative")
        if self.bs_grid is not None:
            object.__setattr__(self, "bs_grid", tuple(self.bs_grid))
            rows, cols = self.bs_grid  # type: ignore[misc]
            if rows < 1 or cols < 1 or rows * cols != self.num_bs:
                raise ValueError("bs_grid must factor num_bs as rows * cols")

    @property
    def n_r(self) -> int:
        """Antennas per BS."""
        return self.n_hr * self.n_vr

    @property
    def n_s(self) -> int:
        """Antennas per UE."""
        return self.n_hs * self.n_vs

    def grid_shape(self) -> tuple[int, int]:
        """
        Return the BS placement grid as (rows, cols).

        Raises:
            ValueError: If no grid is configured and num_bs is not a perfect square.
        """
        if self.bs_grid is not None:
            return self.bs_grid
        side = math.isqrt(self.num_bs)
        if side * side != self.num_bs:
            raise ValueError(
                f"num_bs={self.num_bs} is not a perfect square; set bs_grid explicitly"
            )
        return side, side

    def to_dict(self) -> dict[str, Any]:
        """Plain-dict view, suitable for JSON."""
        data = asdict(self)
        data["bs_grid"] = list(self.bs_grid) if self.bs_grid is not None else None
        return data

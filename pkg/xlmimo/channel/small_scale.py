"""
Near-field small-scale fading from the Fourier plane-wave expansion.

The array response of a planar array is expanded on the DFT wavenumber grid
of its aperture, restricted to propagating waves. Each (receive, transmit)
pair of lattice points carries an independent circularly-symmetric Gaussian
coefficient.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from xlmimo.channel.config import NetworkConfig
from xlmimo.channel.fading import LSFMatrix
from xlmimo.channel.layout import NetworkLayout
from xlmimo.utils import ComplexArray, FloatArray

log = logging.getLogger(__name__)

_LATTICE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class WavenumberLattice:
    """
    Integer lattice points of one array and their 3-D wave vectors.

    Attributes:
        points (np.ndarray): (L, 2) integer pairs (lx, ly), sorted.
        wave_vectors (FloatArray): (L, 3) wave vectors (kx, ky, kz) in rad/m.
    """

    points: np.ndarray
    wave_vectors: FloatArray

    def __len__(self) -> int:
        return int(self.points.shape[0])


def wavenumber_lattice(
    grid_h: int, grid_v: int, spacing_wavelengths: float, wavelength: float = 1.0
) -> WavenumberLattice:
    """
    Enumerate the propagating DFT wavenumbers of a grid_h x grid_v array.

    kx = 2 pi lx / (grid_h * spacing), ky = 2 pi ly / (grid_v * spacing),
    kept when kx^2 + ky^2 <= (2 pi / wavelength)^2.

    Args:
        grid_h (int): Elements along x.
        grid_v (int): Elements along y.
        spacing_wavelengths (float): Element spacing in wavelengths.
        wavelength (float): Wavelength in meters.

    Returns:
        WavenumberLattice: The lattice and its wave vectors.
    """
    if grid_h < 1 or grid_v < 1 or spacing_wavelengths <= 0:
        raise ValueError("grid dimensions must be >= 1 and spacing positive")
    aperture_h = grid_h * spacing_wavelengths
    aperture_v = grid_v * spacing_wavelengths
    lx = np.arange(-int(np.floor(aperture_h)), int(np.floor(aperture_h)) + 1)
    ly = np.arange(-int(np.floor(aperture_v)), int(np.floor(aperture_v)) + 1)
    grid_x, grid_y = np.meshgrid(lx, ly, indexing="ij")
    radius = (grid_x / aperture_h) ** 2 + (grid_y / aperture_v) ** 2
    keep = radius <= 1.0 + _LATTICE_TOLERANCE
    # At half-wavelength spacing lx and lx - grid_h steer alike; keep the lower one.
    keep &= (grid_x < lx[0] + grid_h) & (grid_y < ly[0] + grid_v)
    points = np.column_stack([grid_x[keep], grid_y[keep]])

    k0 = 2 * np.pi / wavelength
    kx = 2 * np.pi * points[:, 0] / (aperture_h * wavelength)
    ky = 2 * np.pi * points[:, 1] / (aperture_v * wavelength)
    kz = np.sqrt(np.maximum(k0**2 - kx**2 - ky**2, 0.0))
    return WavenumberLattice(points=points, wave_vectors=np.column_stack([kx, ky, kz]))


def steering_matrix(offsets: FloatArray, lattice: WavenumberLattice) -> ComplexArray:
    """
    Unit-norm steering vectors, one column per lattice point.

    Args:
        offsets (FloatArray): (N, 3) antenna offsets in meters.
        lattice (WavenumberLattice): Wave vectors to steer to.

    Returns:
        ComplexArray: (N, L) matrix with entries exp(j k . r_n) / sqrt(N).
    """
    phase = offsets @ lattice.wave_vectors.T
    return np.exp(1j * phase) / np.sqrt(offsets.shape[0])  # type: ignore[no-any-return]


@dataclass(frozen=True)
class SpectralProfile:
    """
    Lattices, steering bases and Fourier-coefficient variances of one network.

    Attributes:
        lattice_r (WavenumberLattice): Receive-side lattice.
        lattice_s (WavenumberLattice): Transmit-side lattice.
        variances (FloatArray): (L_r, L_s) coefficient variances, summing to 1.
        steering_r (ComplexArray): (N_r, L_r) receive steering basis.
        steering_s (ComplexArray): (N_s, L_s) transmit steering basis.
    """

    lattice_r: WavenumberLattice
    lattice_s: WavenumberLattice
    variances: FloatArray
    steering_r: ComplexArray
    steering_s: ComplexArray

    def __post_init__(self) -> None:
        if np.any(self.variances < 0):
            raise ValueError("variances must be non-negative")
        if not np.isclose(self.variances.sum(), 1.0, rtol=0, atol=1e-9):
            raise ValueError("variances must sum to 1")

    @property
    def n_r(self) -> int:
        return int(self.steering_r.shape[0])

    @property
    def n_s(self) -> int:
        return int(self.steering_s.shape[0])


def build_spectral_profile(
    layout: NetworkLayout,
    config: NetworkConfig,
    variances: Optional[FloatArray] = None,
) -> SpectralProfile:
    """
    Build the Fourier plane-wave profile of a network.

    The variance profile is isotropic unless one is supplied.
    """
    lattice_r = wavenumber_lattice(config.n_hr, config.n_vr, config.delta_r, config.wavelength)
    lattice_s = wavenumber_lattice(config.n_hs, config.n_vs, config.delta_s, config.wavelength)
    if variances is None:
        variances = np.full((len(lattice_r), len(lattice_s)), 1.0 / (len(lattice_r) * len(lattice_s)))
    log.debug(
        "Spectral profile with %d receive and %d transmit lattice points",
        len(lattice_r),
        len(lattice_s),
    )
    return SpectralProfile(
        lattice_r=lattice_r,
        lattice_s=lattice_s,
        variances=variances,
        steering_r=steering_matrix(layout.bs_offsets, lattice_r),
        steering_s=steering_matrix(layout.ue_offsets, lattice_s),
    )


def sample_small_scale(
    profile: SpectralProfile, layout: NetworkLayout, rng: np.random.Generator
) -> ComplexArray:
    """
    Draw one small-scale fading matrix H_mk for every BS-UE pair.

    H_mk = sqrt(N_r N_s) * sum over lattice pairs of H_a * a_r a_s^T, with
    H_a ~ CN(0, sigma^2) independent per lattice pair and per (m, k).

    Returns:
        ComplexArray: (M, K, N_r, N_s).
    """
    shape = (layout.num_bs, layout.num_ue) + profile.variances.shape
    scale = np.sqrt(profile.variances / 2.0)
    coefficients = scale * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))
    return np.sqrt(profile.n_r * profile.n_s) * (  # type: ignore[no-any-return]
        profile.steering_r @ coefficients @ profile.steering_s.T
    )


@dataclass(frozen=True)
class ChannelSet:
    """
    A batch of channel realizations G_mk = sqrt(beta_mk) H_mk.

    Attributes:
        gains (ComplexArray): (N_mc, M, K, N_r, N_s) channel matrices.
        lsf (LSFMatrix): The LSF coefficients the batch was scaled with.
    """

    gains: ComplexArray
    lsf: LSFMatrix

    @property
    def n_mc(self) -> int:
        return int(self.gains.shape[0])

    @property
    def num_bs(self) -> int:
        return int(self.gains.shape[1])

    @property
    def num_ue(self) -> int:
        return int(self.gains.shape[2])

    @property
    def n_r(self) -> int:
        return int(self.gains.shape[3])

    @property
    def n_s(self) -> int:
        return int(self.gains.shape[4])

    @property
    def realizations(self) -> list[ComplexArray]:
        return list(self.gains)


def assemble_channel(lsf: LSFMatrix, small_scale: Sequence[ComplexArray]) -> ChannelSet:
    """
    Scale small-scale draws by sqrt(beta_mk).

    Args:
        lsf (LSFMatrix): (M, K) coefficients.
        small_scale (Sequence[ComplexArray]): N_mc arrays of shape (M, K, N_r, N_s).

    Returns:
        ChannelSet: The scaled batch.
    """
    if len(small_scale) < 1:
        raise ValueError("n_mc must be at least 1")
    draws = np.stack(list(small_scale))
    gains = np.sqrt(lsf.beta)[None, :, :, None, None] * draws
    return ChannelSet(gains=gains, lsf=lsf)


def draw_channels(
    lsf: LSFMatrix,
    profile: SpectralProfile,
    layout: NetworkLayout,
    n_mc: int,
    rng: np.random.Generator,
) -> ChannelSet:
    """
    Draw N_mc independent realizations; each owns a generator spawned from rng.
    """
    if n_mc < 1:
        raise ValueError("n_mc must be at least 1")
    children = rng.spawn(n_mc)
    return assemble_channel(
        lsf, [sample_small_scale(profile, layout, child) for child in children]
    )

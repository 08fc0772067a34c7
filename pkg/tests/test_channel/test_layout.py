"""Tests for network placement."""

import numpy as np
import pytest

from xlmimo.channel import NetworkConfig, place_network, redraw_ues
from xlmimo.channel.layout import antenna_offsets


def test_nine_bs_grid_centers() -> None:
    """Nine BSs sit on the centers of an equal-area 3x3 partition."""
    config = NetworkConfig(num_bs=9, num_ue=6)
    layout = place_network(config, np.random.default_rng(0))

    centers = np.array([1000 / 6, 500.0, 5000 / 6])
    np.testing.assert_allclose(np.unique(np.round(layout.bs_positions[:, 0], 6)), centers)
    np.testing.assert_allclose(np.unique(np.round(layout.bs_positions[:, 1], 6)), centers)
    assert np.all(layout.bs_positions[:, 2] == config.bs_ue_height_gap)


def test_single_bs_at_center() -> None:
    layout = place_network(NetworkConfig(num_bs=1, num_ue=1), np.random.default_rng(0))

    assert layout.bs_positions[0, :2] == pytest.approx([500.0, 500.0])


def test_ues_inside_square_at_ground(desk_config: NetworkConfig) -> None:
    layout = place_network(desk_config, np.random.default_rng(3))

    assert layout.ue_positions.shape == (desk_config.num_ue, 3)
    assert np.all(layout.ue_positions[:, :2] >= 0)
    assert np.all(layout.ue_positions[:, :2] <= desk_config.area_side)
    assert np.all(layout.ue_positions[:, 2] == 0)


def test_same_seed_same_layout(desk_config: NetworkConfig) -> None:
    first = place_network(desk_config, np.random.default_rng(11))
    second = place_network(desk_config, np.random.default_rng(11))

    np.testing.assert_array_equal(first.ue_positions, second.ue_positions)
    np.testing.assert_array_equal(first.bs_positions, second.bs_positions)


def test_non_square_bs_count_rejected() -> None:
    """Without an explicit grid, M must be a perfect square."""
    with pytest.raises(ValueError, match="perfect square"):
        place_network(NetworkConfig(num_bs=2, num_ue=2), np.random.default_rng(0))


def test_explicit_grid_allows_two_bs(tiny_config: NetworkConfig) -> None:
    layout = place_network(tiny_config, np.random.default_rng(0))

    assert layout.bs_positions[:, 0] == pytest.approx([250.0, 750.0])
    assert layout.bs_positions[:, 1] == pytest.approx([500.0, 500.0])


def test_bad_grid_rejected() -> None:
    with pytest.raises(ValueError, match="bs_grid"):
        NetworkConfig(num_bs=4, num_ue=1, bs_grid=(3, 1))


@pytest.mark.parametrize("spacing", [0.0, 0.6])
def test_spacing_outside_half_wavelength_rejected(spacing: float) -> None:
    with pytest.raises(ValueError, match="delta_r"):
        NetworkConfig(delta_r=spacing)


def test_antenna_offsets_form_lattice() -> None:
    """Offsets run row by row with the configured spacing."""
    offsets = antenna_offsets(3, 2, 0.1)

    assert offsets.shape == (6, 3)
    assert offsets[:3, 0] == pytest.approx([0.0, 0.1, 0.2])
    assert offsets[:3, 1] == pytest.approx([0.0, 0.0, 0.0])
    assert offsets[3:, 1] == pytest.approx([0.1, 0.1, 0.1])
    assert np.all(offsets[:, 2] == 0)


def test_redraw_keeps_bs(desk_config: NetworkConfig) -> None:
    rng = np.random.default_rng(5)
    layout = place_network(desk_config, rng)
    moved = redraw_ues(layout, desk_config, rng)

    np.testing.assert_array_equal(moved.bs_positions, layout.bs_positions)
    assert not np.array_equal(moved.ue_positions, layout.ue_positions)

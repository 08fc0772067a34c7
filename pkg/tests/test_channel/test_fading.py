"""Tests for large-scale fading."""

import numpy as np
import pytest

from xlmimo.channel import (
    LSFMatrix,
    NetworkConfig,
    NetworkLayout,
    large_scale_fading,
    place_network,
    wraparound_distances,
)
from xlmimo.channel.fading import pathloss_db


def _layout(bs_xy: tuple[float, float], ue_xy: tuple[float, float], height: float = 0.0) -> NetworkLayout:
    return NetworkLayout(
        bs_positions=np.array([[bs_xy[0], bs_xy[1], height]]),
        ue_positions=np.array([[ue_xy[0], ue_xy[1], 0.0]]),
        bs_offsets=np.zeros((1, 3)),
        ue_offsets=np.zeros((1, 3)),
    )


@pytest.mark.parametrize("distance,expected", [(1.0, -30.5), (100.0, -103.9)])
def test_pathloss_values(distance: float, expected: float) -> None:
    assert pathloss_db(np.array([distance]))[0] == pytest.approx(expected)


@pytest.mark.parametrize("horizontal,expected", [(1.0, -30.5), (100.0, -103.9)])
def test_lsf_without_shadowing(horizontal: float, expected: float) -> None:
    config = NetworkConfig(num_bs=1, num_ue=1, bs_ue_height_gap=0.0)
    lsf = large_scale_fading(_layout((500.0, 500.0), (500.0 + horizontal, 500.0)), config, None)

    assert lsf.beta_db[0, 0] == pytest.approx(expected)


def test_height_gap_enters_distance() -> None:
    config = NetworkConfig(num_bs=1, num_ue=1, bs_ue_height_gap=10.0)
    lsf = large_scale_fading(_layout((500.0, 500.0), (500.0, 500.0), 10.0), config, None)

    assert lsf.beta_db[0, 0] == pytest.approx(-30.5 - 36.7)


def test_wraparound_shorter_than_direct() -> None:
    """A UE in one corner is close to a BS near the opposite corner."""
    layout = _layout((900.0, 900.0), (0.0, 0.0))
    wrapped = wraparound_distances(layout, 1000.0)[0, 0]

    direct = np.hypot(900.0, 900.0)
    images = [
        np.hypot(0.0 + dx * 1000 - 900.0, 0.0 + dy * 1000 - 900.0)
        for dx in (-1, 0, 1)
        for dy in (-1, 0, 1)
    ]
    assert wrapped < direct
    assert wrapped == pytest.approx(min(images))
    assert wrapped == pytest.approx(np.hypot(100.0, 100.0))


def test_wraparound_translation_invariance(desk_config: NetworkConfig) -> None:
    layout = place_network(desk_config, np.random.default_rng(2))
    shifted = NetworkLayout(
        bs_positions=layout.bs_positions,
        ue_positions=layout.ue_positions + np.array([desk_config.area_side, 0.0, 0.0]),
        bs_offsets=layout.bs_offsets,
        ue_offsets=layout.ue_offsets,
    )

    np.testing.assert_allclose(
        wraparound_distances(shifted, desk_config.area_side),
        wraparound_distances(layout, desk_config.area_side),
        rtol=1e-9,
    )


def test_shadowing_is_seeded(desk_config: NetworkConfig) -> None:
    layout = place_network(desk_config, np.random.default_rng(2))
    first = large_scale_fading(layout, desk_config, np.random.default_rng(9))
    second = large_scale_fading(layout, desk_config, np.random.default_rng(9))
    median = large_scale_fading(layout, desk_config, None)

    np.testing.assert_array_equal(first.beta, second.beta)
    assert not np.allclose(first.beta, median.beta)
    assert first.beta.shape == (desk_config.num_bs, desk_config.num_ue)
    assert np.all(first.beta > 0)


@pytest.mark.parametrize("beta", [[[0.0]], [[np.inf]], [[-1.0]]])
def test_lsf_matrix_rejects_invalid(beta: list[list[float]]) -> None:
    with pytest.raises(ValueError):
        LSFMatrix(beta=np.array(beta))

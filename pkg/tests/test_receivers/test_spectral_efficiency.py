"""Tests for the Monte-Carlo SE estimate."""

import numpy as np
import pytest

from test_utils.oracles import max_relative_error, naive_se
from xlmimo.channel import (
    ChannelSet,
    LSFMatrix,
    NetworkConfig,
    build_spectral_profile,
    draw_channels,
    large_scale_fading,
    place_network,
)
from xlmimo.receivers import (
    CombinerSet,
    PowerAllocation,
    build_combiners,
    combined_channels,
    estimate_se,
    mr_combining,
    per_antenna_cap,
)


def _channel_set(gains: np.ndarray) -> ChannelSet:
    return ChannelSet(gains=gains, lsf=LSFMatrix(beta=np.ones(gains.shape[1:3])))


def _random_gains(rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def test_siso_mr_closed_form(rng: np.random.Generator) -> None:
    """
    With g ~ CN(0, 1), SE = log2(1 + p / (p + sigma^2)).
    """
    channels = _channel_set(_random_gains(rng, (200_000, 1, 1, 1, 1)))
    powers = PowerAllocation(p=np.array([1.0]), n_s=1, p_max=1.0)

    stats = estimate_se(channels, mr_combining(channels), powers, noise_power=1.0)

    assert stats.se[0] == pytest.approx(np.log2(1.5), rel=0.02)


def test_siso_mr_sample_moments(rng: np.random.Generator) -> None:
    """The estimate uses sample means of |g|^2 and |g|^4."""
    g = _random_gains(rng, (500, 1, 1, 1, 1))
    channels = _channel_set(g)
    p, noise = 0.3, 0.2
    powers = PowerAllocation(p=np.array([p]), n_s=1, p_max=1.0)

    stats = estimate_se(channels, mr_combining(channels), powers, noise)

    s = np.mean(np.abs(g) ** 2)
    q = np.mean(np.abs(g) ** 4)
    sinr = p * s**2 / (p * q - p * s**2 + noise * s)
    assert stats.se[0] == pytest.approx(np.log2(1 + sinr), rel=1e-3)


@pytest.mark.parametrize("combiner", ["mr", "lmmse"])
def test_matches_explicit_loops(rng: np.random.Generator, combiner: str) -> None:
    gains = _random_gains(rng, (5, 2, 3, 4, 2))
    channels = _channel_set(gains)
    powers = PowerAllocation(p=np.array([0.1, 0.04, 0.07]), n_s=2, p_max=0.2)
    combiners = build_combiners(combiner, channels, powers, 0.1)

    stats = estimate_se(channels, combiners, powers, 0.1)

    expected = naive_se(gains, combiners.combiners, powers.p, 0.1)
    assert max_relative_error(stats.se, expected) < 1e-9
    assert stats.sum_se == pytest.approx(expected.sum())


def test_combined_channel_shape_and_value(rng: np.random.Generator) -> None:
    gains = _random_gains(rng, (2, 3, 2, 4, 1))

    combined = combined_channels(gains, gains)

    assert combined.shape == (2, 2, 1, 2, 1)
    expected = sum(gains[1, m, 0].conj().T @ gains[1, m, 1] for m in range(3)) / 3
    np.testing.assert_allclose(combined[1, 0, :, 1, :], expected)


def test_scaling_combiners_keeps_se(rng: np.random.Generator) -> None:
    channels = _channel_set(_random_gains(rng, (6, 2, 2, 4, 1)))
    powers = PowerAllocation(p=np.array([0.1, 0.2]), n_s=1, p_max=0.2)
    combiner = mr_combining(channels)
    scaled = CombinerSet(combiners=(2.0 - 1.0j) * combiner.combiners, valid=combiner.valid)

    base = estimate_se(channels, combiner, powers, 0.1)
    other = estimate_se(channels, scaled, powers, 0.1)

    np.testing.assert_allclose(other.se, base.se, rtol=1e-9)


def test_single_ue_se_grows_with_power(rng: np.random.Generator) -> None:
    channels = _channel_set(_random_gains(rng, (50, 2, 1, 4, 1)))
    combiner = mr_combining(channels)

    se = [
        estimate_se(
            channels, combiner, PowerAllocation(p=np.array([p]), n_s=1, p_max=1.0), 0.5
        ).se[0]
        for p in (0.01, 0.1, 0.5, 1.0)
    ]

    assert all(low < high for low, high in zip(se, se[1:]))


@pytest.mark.parametrize("combiner", ["mr", "lmmse"])
def test_zero_powers_give_zero_se(rng: np.random.Generator, combiner: str) -> None:
    channels = _channel_set(_random_gains(rng, (4, 2, 2, 4, 1)))
    powers = PowerAllocation(p=np.zeros(2), n_s=1, p_max=0.2)

    stats = estimate_se(channels, build_combiners(combiner, channels, powers, 0.1), powers, 0.1)

    assert np.all(stats.se == 0)


def test_lmmse_suppresses_interference(rng: np.random.Generator) -> None:
    """Two strong co-located UEs at one BS: local MMSE beats MR."""
    channels = _channel_set(_random_gains(rng, (200, 1, 2, 4, 1)))
    powers = PowerAllocation(p=np.ones(2), n_s=1, p_max=1.0)

    mr = estimate_se(channels, build_combiners("mr", channels, powers, 0.01), powers, 0.01)
    lmmse = estimate_se(channels, build_combiners("lmmse", channels, powers, 0.01), powers, 0.01)

    assert lmmse.sum_se > mr.sum_se


def test_misaligned_combiner_rejected(rng: np.random.Generator) -> None:
    channels = _channel_set(_random_gains(rng, (2, 1, 1, 2, 1)))
    other = mr_combining(_channel_set(_random_gains(rng, (3, 1, 1, 2, 1))))
    powers = PowerAllocation(p=np.array([0.1]), n_s=1, p_max=0.2)

    with pytest.raises(ValueError, match="aligned"):
        estimate_se(channels, other, powers, 0.1)


def test_se_is_non_negative(rng: np.random.Generator) -> None:
    channels = _channel_set(_random_gains(rng, (3, 2, 3, 2, 2)))
    powers = PowerAllocation(p=np.array([0.1, 0.0, 0.05]), n_s=2, p_max=0.2)

    stats = estimate_se(channels, mr_combining(channels), powers, 0.1)

    assert np.all(stats.se >= 0)
    assert stats.se[1] == 0


def _full_power(config: NetworkConfig) -> PowerAllocation:
    cap = per_antenna_cap(config.p_max, config.n_s)
    return PowerAllocation(p=np.full(config.num_ue, cap), n_s=config.n_s, p_max=config.p_max)


def _sum_se(config: NetworkConfig, channels: ChannelSet, combiner: str) -> float:
    powers = _full_power(config)
    combiners = build_combiners(combiner, channels, powers, config.noise_power)
    return estimate_se(channels, combiners, powers, config.noise_power).sum_se


def test_lmmse_beats_mr_on_random_layouts(desk_config: NetworkConfig) -> None:
    """
    On the same realizations, L-MMSE reaches at least the MR sum-SE in 95 of 100 layouts.
    """
    rng = np.random.default_rng(2024)
    wins = 0
    for _ in range(100):
        layout = place_network(desk_config, rng)
        lsf = large_scale_fading(layout, desk_config, rng)
        profile = build_spectral_profile(layout, desk_config)
        channels = draw_channels(lsf, profile, layout, 20, rng)
        wins += _sum_se(desk_config, channels, "lmmse") >= _sum_se(desk_config, channels, "mr")

    assert wins >= 95


@pytest.mark.slow
@pytest.mark.parametrize("combiner", ["mr", "lmmse"])
def test_estimate_settles_with_more_realizations(desk_config: NetworkConfig, combiner: str) -> None:
    """Ten thousand realizations land within 3% of one thousand on a fixed layout."""
    rng = np.random.default_rng(77)
    layout = place_network(desk_config, rng)
    lsf = large_scale_fading(layout, desk_config, rng)
    profile = build_spectral_profile(layout, desk_config)

    coarse = _sum_se(desk_config, draw_channels(lsf, profile, layout, 1_000, rng), combiner)
    fine = _sum_se(desk_config, draw_channels(lsf, profile, layout, 10_000, rng), combiner)

    assert abs(coarse - fine) < 0.03 * fine

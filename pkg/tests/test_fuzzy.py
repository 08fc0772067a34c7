"""Tests for the fuzzy-agent mapping."""

import numpy as np
import pytest

from xlmimo.fuzzy import (
    FuzzyConfig,
    FuzzySystem,
    defuzzify_actions,
    fuzzify_rewards,
    fuzzify_states,
    init_fuzzy_states,
    mapping_weights,
    membership,
)


def test_membership_value() -> None:
    assert membership(1.0, 0.0, d_a=1, m=2) == pytest.approx(np.exp(-0.5))
    assert membership(0.3, 0.3, d_a=1, m=2) == 1.0


def test_membership_rejects_bad_scale() -> None:
    with pytest.raises(ValueError):
        membership(0.0, 1.0, d_a=0, m=2)


def test_worked_defuzzification() -> None:
    """One agent at 0, fuzzy centers at 0 and 1, fuzzy actions 0 and 1."""
    config = FuzzyConfig(m=2, d_s=1)
    weights = mapping_weights(np.array([[0.0]]), np.array([[0.0], [1.0]]), config)

    assert weights.rows[0] == pytest.approx([0.622459, 0.377541], abs=1e-6)
    action = defuzzify_actions(np.array([[0.0], [1.0]]), weights)
    assert action[0, 0] == pytest.approx(0.377541, abs=1e-6)


def test_fuzzified_rewards_use_column_weights() -> None:
    config = FuzzyConfig(m=2, d_s=1)
    states = np.array([[0.0], [1.0]])
    weights = mapping_weights(states, states.copy(), config)

    np.testing.assert_allclose(weights.columns.sum(axis=0), [1.0, 1.0])
    rewards = fuzzify_rewards(np.array([1.0, 0.0]), weights)
    assert rewards == pytest.approx([0.622459, 0.377541], abs=1e-6)
    next_states = fuzzify_states(np.array([[2.0], [4.0]]), weights)
    assert next_states.shape == (2, 1)
    assert next_states[0, 0] == pytest.approx(0.622459 * 2 + 0.377541 * 4, abs=1e-5)


def test_memberships_multiply_over_dimensions() -> None:
    config = FuzzyConfig(m=1, d_s=2)
    weights = mapping_weights(np.array([[0.0, 0.0]]), np.array([[1.0, 2.0]]), config)

    assert weights.raw[0, 0] == pytest.approx(membership(1.0, 0.0, 1, 1) * membership(2.0, 0.0, 1, 1))


def test_distant_agents_stay_finite() -> None:
    config = FuzzyConfig(m=2, d_s=1)
    weights = mapping_weights(np.array([[1e4], [-1e4]]), np.array([[0.0], [1.0]]), config)

    assert np.all(np.isfinite(weights.rows))
    assert np.all(np.isfinite(weights.columns))
    np.testing.assert_allclose(weights.rows.sum(axis=1), 1.0)
    np.testing.assert_allclose(weights.columns.sum(axis=0), 1.0)


def test_defuzzified_actions_in_convex_hull(rng: np.random.Generator) -> None:
    config = FuzzyConfig(m=3, d_s=4)
    states = rng.uniform(-3, 3, size=(6, 4))
    system = FuzzySystem.initialize(config, states, rng)
    fuzzy_actions = np.array([[0.2], [0.5], [0.9]])

    actions = system.defuzzify(fuzzy_actions)

    assert actions.shape == (6, 1)
    assert np.all(actions >= 0.2 - 1e-12)
    assert np.all(actions <= 0.9 + 1e-12)


def test_init_samples_distinct_rows(rng: np.random.Generator) -> None:
    states = np.arange(10.0).reshape(5, 2)

    fuzzy = init_fuzzy_states(states, 3, rng)

    rows = {tuple(row) for row in fuzzy.tolist()}
    assert len(rows) == 3
    assert rows <= {tuple(row) for row in states.tolist()}


def test_init_rejects_too_many_fuzzy_agents(rng: np.random.Generator) -> None:
    with pytest.raises(ValueError, match="cannot be sampled"):
        init_fuzzy_states(np.zeros((2, 3)), 3, rng)


def test_advance_moves_centers(rng: np.random.Generator) -> None:
    config = FuzzyConfig(m=2, d_s=1)
    states = np.array([[0.0], [1.0], [2.0]])
    system = FuzzySystem.initialize(config, states, rng)
    next_states = np.array([[1.0], [1.5], [0.5]])

    batch = system.fuzzify(np.array([[0.3], [0.6]]), np.array([1.0, 2.0, 3.0]), next_states)
    system.advance(batch, next_states)

    np.testing.assert_array_equal(system.fuzzy_states, batch.next_fuzzy_states)
    expected = mapping_weights(next_states, batch.next_fuzzy_states, config)
    np.testing.assert_allclose(system.weights.rows, expected.rows)
    assert batch.fuzzy_rewards.shape == (2,)


def test_config_validation() -> None:
    with pytest.raises(ValueError):
        FuzzyConfig(m=0)
    assert FuzzyConfig(m=3, d_a=1).scale == 3.0


def test_fuzzy_states_shape_checked() -> None:
    with pytest.raises(ValueError, match="fuzzy_states"):
        FuzzySystem(config=FuzzyConfig(m=2, d_s=3), fuzzy_states=np.zeros((2, 2)))

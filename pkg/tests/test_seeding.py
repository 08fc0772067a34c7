"""Tests for seed streams and error translation."""

import numpy as np
import pytest
from django.core.management.base import CommandError

from xlmimo.utils import (
    SEED_LABELS,
    ExperimentRequestError,
    NumericalFailureError,
    command_errors,
    db_to_linear,
    derive_rng,
    linear_to_db,
)


def test_same_label_same_stream() -> None:
    assert derive_rng(3, "layout").random() == derive_rng(3, "layout").random()


def test_streams_are_independent() -> None:
    draws = {label: derive_rng(3, label).random() for label in SEED_LABELS}

    assert len(set(draws.values())) == len(SEED_LABELS)
    assert derive_rng(3, "replay").random() != derive_rng(4, "replay").random()


def test_unknown_label() -> None:
    with pytest.raises(KeyError):
        derive_rng(0, "weather")


def test_db_conversions() -> None:
    assert db_to_linear(-30.0) == pytest.approx(1e-3)
    np.testing.assert_allclose(linear_to_db(db_to_linear(np.array([-90.0, 3.0]))), [-90.0, 3.0])


def test_invalid_input_maps_to_exit_code_2() -> None:
    with pytest.raises(CommandError, match="Invalid experiment") as error:
        with command_errors():
            raise ExperimentRequestError("bad field")

    assert error.value.returncode == 2


def test_numerical_failure_maps_to_exit_code_3() -> None:
    with pytest.raises(CommandError, match="Numerical failure") as error:
        with command_errors():
            raise NumericalFailureError("singular")

    assert error.value.returncode == 3

"""xlmimo Utils."""

import logging
import zlib
from contextlib import contextmanager
from typing import Any, Iterator

import numpy as np
import numpy.typing as npt
from django.core.management.base import CommandError

log = logging.getLogger(__name__)

FloatArray = npt.NDArray[np.float64]
ComplexArray = npt.NDArray[np.complex128]

SEED_LABELS = ("layout", "channel", "init", "exploration", "replay", "fuzzy", "evaluation")


def derive_rng(seed: int, label: str) -> np.random.Generator:
    """
    Derive an independent random generator for a labeled stream.

    The master seed and a stable hash of the label form the entropy of a
    ``SeedSequence``, so holding one stream fixed while changing another is
    possible by swapping labels.

    Args:
        seed (int): The master seed of the experiment.
        label (str): The stream name, e.g. "layout" or "replay".

    Returns:
        np.random.Generator: A generator owned by that stream.
    """
    if label not in SEED_LABELS:
        raise KeyError(f"No seed stream found for the label: {label}")
    return np.random.default_rng(
        np.random.SeedSequence([int(seed), zlib.crc32(label.encode("utf8"))])
    )


def db_to_linear(value: Any) -> Any:
    """Convert a dB quantity to linear scale."""
    return np.power(10.0, np.asarray(value, dtype=float) / 10.0)


def linear_to_db(value: Any) -> Any:
    """Convert a linear quantity to dB."""
    return 10.0 * np.log10(np.asarray(value, dtype=float))


def get_int_value_from_collection(
    collection: dict[str, Any], key: str, default_value: int
) -> int:
    """
    Get int value from the collection.
    """
    try:
        return int(collection[key])
    except (TypeError, ValueError, KeyError):
        return default_value


class ExperimentRequestError(Exception):
    """Invalid experiment input."""


class NumericalFailureError(Exception):
    """A simulation step produced values it cannot recover from."""


@contextmanager
def command_errors() -> Iterator[None]:
    """
    Translate simulator errors into management-command exit codes.

    Invalid input exits with 2, numerical failure with 3.
    """
    try:
        yield
    except ExperimentRequestError as error:
        raise CommandError(f"Invalid experiment: {error}", returncode=2) from error
    except NumericalFailureError as error:
        raise CommandError(f"Numerical failure: {error}", returncode=3) from error

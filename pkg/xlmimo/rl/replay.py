"""
Fixed-capacity FIFO experience replay.
"""

import logging
from typing import Any

import numpy as np

from xlmimo.utils import FloatArray

log = logging.getLogger(__name__)


class BufferNotReadyError(RuntimeError):
    """Fewer transitions are stored than a batch needs."""


class ReplayBuffer:
    """
    Circular storage of transitions with named fields.

    Field arrays are allocated on the first push from the shapes of the
    pushed values; once full, every push overwrites the oldest transition.
    """

    def __init__(self, capacity: int) -> None:
        if capacity < 1:
            raise ValueError("capacity must be at least 1")
        self.capacity = capacity
        self._fields: dict[str, FloatArray] = {}
        self._next = 0
        self._size = 0

    def __len__(self) -> int:
        return self._size

    def push(self, **transition: Any) -> None:
        """Store one transition, evicting the oldest when at capacity."""
        if not self._fields:
            for key, value in transition.items():
                value = np.asarray(value, dtype=float)
                self._fields[key] = np.zeros((self.capacity,) + value.shape)
        elif set(transition) != set(self._fields):
            raise ValueError(f"transition fields must be {sorted(self._fields)}")
        for key, value in transition.items():
            self._fields[key][self._next] = value
        self._next = (self._next + 1) % self.capacity
        self._size = min(self._size + 1, self.capacity)

    def ready(self, batch_size: int) -> bool:
        return self._size >= batch_size

    def sample(self, batch_size: int, rng: np.random.Generator) -> dict[str, FloatArray]:
        """
        Uniform sample without replacement.

        Raises:
            BufferNotReadyError: If fewer than batch_size transitions are stored.
        """
        if not self.ready(batch_size):
            raise BufferNotReadyError(
                f"{self._size} transitions stored, {batch_size} needed"
            )
        rows = self._order()[rng.choice(self._size, size=batch_size, replace=False)]
        return {key: values[rows] for key, values in self._fields.items()}

    def contents(self) -> dict[str, FloatArray]:
        """Stored transitions, oldest first."""
        rows = self._order()
        return {key: values[rows] for key, values in self._fields.items()}

    def _order(self) -> np.ndarray:
        if self._size < self.capacity:
            return np.arange(self._size)
        return (np.arange(self.capacity) + self._next) % self.capacity  # type: ignore[no-any-return]

"""
Learning hyperparameters shared by every actor-critic trainer.
"""

from dataclasses import asdict, dataclass
from typing import Any

import numpy as np


@dataclass(frozen=True)
class Hyperparams:
    """
    Attributes:
        gamma (float): Discount factor in [0, 1).
        tau (float): Soft-update rate in (0, 1]; weight given to the evaluation network.
        actor_lr (float): Actor Adam step size.
        critic_lr (float): Critic Adam step size.
        batch_size (int): Mini-batch size.
        buffer_capacity (int): Replay capacity per buffer.
        noise_start (float): Initial std of the Gaussian exploration noise.
        noise_end (float): Final std, reached on the last episode.
        actor_hidden (tuple[int, ...]): Actor hidden widths.
        critic_hidden (tuple[int, ...]): Critic hidden widths.
        reward_scale (float): Multiplier on rewards before they reach the learner.
    """

    gamma: float = 0.9
    tau: float = 0.01
    actor_lr: float = 1e-4
    critic_lr: float = 1e-3
    batch_size: int = 64
    buffer_capacity: int = 10_000
    noise_start: float = 0.2
    noise_end: float = 0.01
    actor_hidden: tuple[int, ...] = (64, 64)
    critic_hidden: tuple[int, ...] = (128, 128)
    reward_scale: float = 0.1

    def __post_init__(self) -> None:
        object.__setattr__(self, "actor_hidden", tuple(self.actor_hidden))
        object.__setattr__(self, "critic_hidden", tuple(self.critic_hidden))
        if not 0.0 <= self.gamma < 1.0:
            raise ValueError("gamma must lie in [0, 1)")
        if not 0.0 < self.tau <= 1.0:
            raise ValueError("tau must lie in (0, 1]")
        if self.actor_lr <= 0 or self.critic_lr <= 0:
            raise ValueError("learning rates must be positive")
        if self.batch_size < 1 or self.buffer_capacity < self.batch_size:
            raise ValueError("batch_size must be >= 1 and fit in the buffer")
        if self.noise_start < 0 or self.noise_end < 0:
            raise ValueError("exploration noise must be non-negative")
        if self.reward_scale <= 0:
            raise ValueError("reward_scale must be positive")

    def noise_scale(self, episode: int, episodes: int) -> float:
        """Exponential decay from noise_start to noise_end over the run."""
        if episodes <= 1 or self.noise_start == 0:
            return self.noise_start
        if self.noise_end == 0:
            return self.noise_start * (1.0 - episode / (episodes - 1))
        ratio = self.noise_end / self.noise_start
        return float(self.noise_start * ratio ** (episode / (episodes - 1)))

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["actor_hidden"] = list(self.actor_hidden)
        data["critic_hidden"] = list(self.critic_hidden)
        return data


def clip_actions(actions: np.ndarray) -> np.ndarray:
    """Keep actions inside the [0, 1] box."""
    return np.clip(actions, 0.0, 1.0)  # type: ignore[no-any-return]

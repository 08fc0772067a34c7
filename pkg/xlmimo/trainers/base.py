"""
Episode loop shared by every power-control method.
"""

import logging
import time
from abc import ABC, abstractmethod
from typing import Callable, Optional

import numpy as np

from xlmimo.rl.hyper import Hyperparams
from xlmimo.trainers.environment import PowerControlEnv, StepResult, action_to_power
from xlmimo.trainers.log import EpisodeRecord, TrainingLog
from xlmimo.utils import FloatArray, derive_rng

log = logging.getLogger(__name__)

EpisodeCallback = Callable[[EpisodeRecord], None]


class BaseTrainer(ABC):
    """
    Abstract power-control method driven through episodes of env steps.

    Subclasses choose actions, consume transitions and optionally learn.
    Every random stream is derived from the master seed by label, so two
    trainers built from the same seed and env replay identically.
    """

    method: str = "base"
    action_floor: float = 0.0
    progress_every: int = 100

    def __init__(
        self,
        env: PowerControlEnv,
        hyper: Hyperparams,
        seed: int,
        steps_per_episode: int = 10,
    ) -> None:
        if steps_per_episode < 1:
            raise ValueError("steps_per_episode must be at least 1")
        self.env = env
        self.hyper = hyper
        self.seed = seed
        self.steps_per_episode = steps_per_episode
        self.init_rng = derive_rng(seed, "init")
        self.exploration_rng = derive_rng(seed, "exploration")
        self.replay_rng = derive_rng(seed, "replay")
        self.fuzzy_rng = derive_rng(seed, "fuzzy")
        self.log = TrainingLog(num_ue=env.num_ue)
        self._losses: list[tuple[float, float]] = []

    @abstractmethod
    def begin_episode(self, observations: FloatArray) -> None:
        """Prepare per-episode state from the first observations."""

    @abstractmethod
    def act(self, observations: FloatArray, noise_scale: float) -> FloatArray:
        """Return (K, 1) agent actions in [0, 1]."""

    def observe(
        self, observations: FloatArray, actions: FloatArray, result: StepResult
    ) -> None:
        """Consume the outcome of the last action."""

    def learn(self) -> Optional[tuple[float, float]]:
        """Run one update; return (critic loss, mean actor Q) when an update happened."""
        return None

    def fuzzy_actions(self) -> Optional[FloatArray]:
        """Fuzzy-agent actions of the last step, for methods with a fuzzy layer."""
        return None

    def state_dict(self) -> dict[str, np.ndarray]:
        """Named tensors to checkpoint."""
        return {}

    def policy(self, observations: FloatArray) -> FloatArray:
        """Greedy actions for a fresh drop, without exploration."""
        self.begin_episode(observations)
        return self.act(observations, 0.0)

    def train(
        self, episodes: int, callback: Optional[EpisodeCallback] = None
    ) -> TrainingLog:
        """
        Run ``episodes`` episodes and return the log.

        The log is kept on ``self.log`` while it grows, so a caller can
        flush the completed episodes if a step raises.
        """
        for episode in range(episodes):
            record = self._run_episode(episode, self.hyper.noise_scale(episode, episodes))
            self.log.append(record)
            if callback is not None:
                callback(record)
            if (episode + 1) % self.progress_every == 0:
                log.info(
                    "%s episode %d/%d: mean sum-SE %.3f, power %.4f W",
                    self.method,
                    episode + 1,
                    episodes,
                    self.log.final_mean(self.progress_every),
                    float(np.mean(self.log.power_watts[-self.progress_every:])),
                )
        return self.log

    def _run_episode(self, episode: int, noise_scale: float) -> EpisodeRecord:
        start = time.perf_counter()
        observations = self.env.reset()
        self.begin_episode(observations)
        sum_se, ue_power, agent_actions, fuzzy_actions = [], [], [], []
        ue_se = np.zeros(self.env.num_ue)
        self._losses = []
        for _ in range(self.steps_per_episode):
            actions = self.act(observations, noise_scale)
            powers = action_to_power(actions, self.env.config, self.action_floor)
            result = self.env.step(powers)
            self.observe(observations, actions, result)
            losses = self.learn()
            if losses is not None:
                self._losses.append(losses)
            sum_se.append(result.sum_se)
            ue_se += result.se
            ue_power.append(powers.total_per_ue)
            agent_actions.append(np.asarray(actions).reshape(-1))
            fuzzy = self.fuzzy_actions()
            if fuzzy is not None:
                fuzzy_actions.append(fuzzy.reshape(-1))
            observations = result.next_observations
        wall_ms = (time.perf_counter() - start) * 1000.0
        losses_array = np.array(self._losses) if self._losses else np.full((1, 2), np.nan)
        ue_power_array = np.array(ue_power)
        return EpisodeRecord(
            episode=episode,
            sum_se=float(np.mean(sum_se)),
            ue_se=ue_se / self.steps_per_episode,
            power_watts=float(np.mean(ue_power_array.sum(axis=1))),
            wall_ms=wall_ms,
            ue_power=ue_power_array,
            agent_actions=np.array(agent_actions),
            fuzzy_actions=np.array(fuzzy_actions) if fuzzy_actions else None,
            critic_loss=float(np.mean(losses_array[:, 0])),
            actor_q=float(np.mean(losses_array[:, 1])),
        )

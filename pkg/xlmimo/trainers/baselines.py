"""
Non-learned power-control baselines and the exhaustive grid-search oracle.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from xlmimo.rl import Hyperparams
from xlmimo.trainers.base import BaseTrainer
from xlmimo.trainers.environment import PowerControlEnv, action_to_power
from xlmimo.trainers.evaluation import EvaluationDrop
from xlmimo.trainers.log import TrainingLog
from xlmimo.utils import FloatArray

log = logging.getLogger(__name__)


class FullPowerPolicy(BaseTrainer):
    """Every UE transmits at P_max."""

    method = "full_power"

    def begin_episode(self, observations: FloatArray) -> None:
        pass

    def act(self, observations: FloatArray, noise_scale: float) -> FloatArray:
        return np.ones((self.env.num_ue, 1))


class RandomPowerPolicy(BaseTrainer):
    """Each UE draws a_k ~ U(0, 1) once per episode."""

    method = "random_power"

    def __init__(
        self,
        env: PowerControlEnv,
        hyper: Hyperparams,
        seed: int,
        steps_per_episode: int = 10,
    ) -> None:
        super().__init__(env, hyper, seed, steps_per_episode)
        self._actions: Optional[FloatArray] = None

    def begin_episode(self, observations: FloatArray) -> None:
        self._actions = self.exploration_rng.uniform(0.0, 1.0, size=(self.env.num_ue, 1))

    def act(self, observations: FloatArray, noise_scale: float) -> FloatArray:
        assert self._actions is not None
        return self._actions


BASELINES: dict[str, type[BaseTrainer]] = {
    FullPowerPolicy.method: FullPowerPolicy,
    RandomPowerPolicy.method: RandomPowerPolicy,
}


def baseline_policies(
    kind: str,
    env: PowerControlEnv,
    episodes: int,
    seed: int,
    steps_per_episode: int = 10,
) -> TrainingLog:
    """
    Run a baseline through the same episode loop as the learners.

    Args:
        kind (str): "full_power" or "random_power".
        env (PowerControlEnv): The environment.
        episodes (int): Number of episodes.
        seed (int): Master seed; the random baseline draws from its exploration stream.

    Returns:
        TrainingLog: One record per episode.
    """
    try:
        policy_class = BASELINES[kind]
    except KeyError as error:
        raise ValueError(f"Unknown baseline: {kind}") from error
    policy = policy_class(env, Hyperparams(), seed, steps_per_episode)
    return policy.train(episodes)


@dataclass(frozen=True)
class GridSearchResult:
    """
    Best grid allocation per drop.

    Attributes:
        levels (FloatArray): (L,) action levels searched per UE.
        best_actions (FloatArray): (drops, K) best action per UE.
        best_sum_se (FloatArray): (drops,) sum-SE of the best allocation.
    """

    levels: FloatArray
    best_actions: FloatArray
    best_sum_se: FloatArray

    @property
    def mean_sum_se(self) -> float:
        return float(np.mean(self.best_sum_se))


def grid_search_power(
    env: PowerControlEnv, drops: list[EvaluationDrop], levels: int = 21
) -> GridSearchResult:
    """
    Exhaustive search of per-UE action levels linspace(0, 1, levels) on each drop.

    Every one of the levels**K allocations is scored with the environment's
    combiner on the drop's frozen channels, so cost grows exponentially in K.
    """
    if levels < 2:
        raise ValueError("levels must be at least 2")
    grid = np.linspace(0.0, 1.0, levels)
    best_actions = np.zeros((len(drops), env.num_ue))
    best_sum_se = np.full(len(drops), -np.inf)
    for index, drop in enumerate(drops):
        for point in itertools.product(grid, repeat=env.num_ue):
            actions = np.array(point)
            sum_se = env.evaluate_powers(drop.channels, action_to_power(actions, env.config)).sum_se
            if sum_se > best_sum_se[index]:
                best_sum_se[index] = sum_se
                best_actions[index] = actions
        log.debug("Drop %d: best sum-SE %.4f at %s", index, best_sum_se[index], best_actions[index])
    return GridSearchResult(levels=grid, best_actions=best_actions, best_sum_se=best_sum_se)

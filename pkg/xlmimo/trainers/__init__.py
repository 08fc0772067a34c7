"""
Power-control environment, learners, baselines and evaluation.
"""

from typing import Optional

from xlmimo.fuzzy import FuzzyConfig
from xlmimo.rl import Hyperparams
from xlmimo.trainers.base import BaseTrainer
from xlmimo.trainers.baselines import (
    FullPowerPolicy,
    GridSearchResult,
    RandomPowerPolicy,
    baseline_policies,
    grid_search_power,
)
from xlmimo.trainers.decentralized import DecentralizedTrainer, FlCtdeTrainer, MaddpgTrainer
from xlmimo.trainers.environment import (
    PowerControlEnv,
    StepResult,
    action_to_power,
    build_observations,
)
from xlmimo.trainers.evaluation import EvaluationDrop, build_evaluation_set, evaluate_policy
from xlmimo.trainers.fl_ctce import FlCtceTrainer
from xlmimo.trainers.log import EpisodeRecord, TrainingLog


def build_trainer(
    method: str,
    env: PowerControlEnv,
    hyper: Hyperparams,
    seed: int,
    fuzzy: Optional[FuzzyConfig] = None,
    steps_per_episode: int = 10,
) -> BaseTrainer:
    """
    Instantiate the trainer of a method name.

    Raises:
        ValueError: For an unknown method.
    """
    fuzzy = fuzzy or FuzzyConfig()
    if method == FlCtceTrainer.method:
        return FlCtceTrainer(env, hyper, seed, fuzzy, steps_per_episode)
    if method == FlCtdeTrainer.method:
        return FlCtdeTrainer(env, hyper, seed, fuzzy, steps_per_episode)
    if method == MaddpgTrainer.method:
        return MaddpgTrainer(env, hyper, seed, steps_per_episode)
    if method == FullPowerPolicy.method:
        return FullPowerPolicy(env, hyper, seed, steps_per_episode)
    if method == RandomPowerPolicy.method:
        return RandomPowerPolicy(env, hyper, seed, steps_per_episode)
    raise ValueError(f"Unknown method: {method}")


def train_fl_ctce(
    env: PowerControlEnv,
    fuzzy: FuzzyConfig,
    hyper: Hyperparams,
    seed: int,
    episodes: int,
    steps_per_episode: int = 10,
) -> tuple[TrainingLog, FlCtceTrainer]:
    """Train FL-CTCE; the trainer carries the checkpointable state."""
    trainer = FlCtceTrainer(env, hyper, seed, fuzzy, steps_per_episode)
    return trainer.train(episodes), trainer


def train_fl_ctde(
    env: PowerControlEnv,
    fuzzy: FuzzyConfig,
    hyper: Hyperparams,
    seed: int,
    episodes: int,
    steps_per_episode: int = 10,
) -> tuple[TrainingLog, FlCtdeTrainer]:
    """Train FL-CTDE; the trainer carries the checkpointable state."""
    trainer = FlCtdeTrainer(env, hyper, seed, fuzzy, steps_per_episode)
    return trainer.train(episodes), trainer


def train_maddpg_baseline(
    env: PowerControlEnv,
    hyper: Hyperparams,
    seed: int,
    episodes: int,
    steps_per_episode: int = 10,
) -> tuple[TrainingLog, MaddpgTrainer]:
    """Train plain MADDPG over the K UEs."""
    trainer = MaddpgTrainer(env, hyper, seed, steps_per_episode)
    return trainer.train(episodes), trainer


__all__ = [
    "BaseTrainer",
    "DecentralizedTrainer",
    "EpisodeRecord",
    "EvaluationDrop",
    "FlCtceTrainer",
    "FlCtdeTrainer",
    "FullPowerPolicy",
    "GridSearchResult",
    "MaddpgTrainer",
    "PowerControlEnv",
    "RandomPowerPolicy",
    "StepResult",
    "TrainingLog",
    "action_to_power",
    "baseline_policies",
    "build_evaluation_set",
    "build_observations",
    "build_trainer",
    "evaluate_policy",
    "grid_search_power",
    "train_fl_ctce",
    "train_fl_ctde",
    "train_maddpg_baseline",
]

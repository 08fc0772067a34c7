"""
Fuzzy-logic centralized training with centralized execution.

One joint actor on the CPU maps the concatenated fuzzy states of the m
fuzzy agents to their concatenated fuzzy actions; one joint critic scores
(fuzzy states, fuzzy actions). Fuzzy actions are defuzzified into UE powers
and the UE rewards and next observations are fuzzified back.
"""

import dataclasses
import logging
from typing import Optional

import numpy as np

from xlmimo.constants import FUZZY_ACTION_FLOOR
from xlmimo.fuzzy import FuzzyConfig, FuzzySystem
from xlmimo.rl import (
    Adam,
    Approximator,
    Hyperparams,
    ReplayBuffer,
    actor_grad,
    clip_actions,
    critic_loss_and_grad,
    forward,
    soft_update,
)
from xlmimo.trainers.base import BaseTrainer
from xlmimo.trainers.environment import PowerControlEnv, StepResult
from xlmimo.utils import FloatArray, NumericalFailureError

log = logging.getLogger(__name__)


def fuzzy_config_for(env: PowerControlEnv, fuzzy: FuzzyConfig) -> FuzzyConfig:
    """
    Bind a fuzzy configuration to an environment.

    Observations carry one entry per BS, so d_s is M; power control has one
    action per agent.

    Raises:
        ValueError: If m exceeds K or more than one action dimension is asked for.
    """
    if fuzzy.m > env.num_ue:
        raise ValueError(f"m={fuzzy.m} fuzzy agents exceed K={env.num_ue} UEs")
    if fuzzy.d_a != 1:
        raise ValueError("power control uses a single action per agent (d_a = 1)")
    return dataclasses.replace(fuzzy, d_s=env.observation_size)


def explore(
    actions: FloatArray, noise_scale: float, rng: np.random.Generator
) -> FloatArray:
    """Add Gaussian exploration noise and clip back into [0, 1]."""
    if noise_scale <= 0.0:
        return clip_actions(actions)
    return clip_actions(actions + rng.normal(0.0, noise_scale, size=actions.shape))


def check_finite(loss: float, method: str) -> None:
    if not np.isfinite(loss):
        log.error("%s critic loss became %s", method, loss)
        raise NumericalFailureError(f"{method} critic loss is not finite")


class FlCtceTrainer(BaseTrainer):
    """
    FL-CTCE trainer.

    Attributes:
        fuzzy_config (FuzzyConfig): m fuzzy agents over M-dimensional observations.
        actor (Approximator): Joint actor, m*M -> m with a sigmoid output.
        critic (Approximator): Joint critic, m*M + m -> 1.
        buffer (ReplayBuffer): Joint fuzzy transitions.
    """

    method = "fl_ctce"
    action_floor = FUZZY_ACTION_FLOOR

    def __init__(
        self,
        env: PowerControlEnv,
        hyper: Hyperparams,
        seed: int,
        fuzzy: FuzzyConfig,
        steps_per_episode: int = 10,
    ) -> None:
        super().__init__(env, hyper, seed, steps_per_episode)
        self.fuzzy_config = fuzzy_config_for(env, fuzzy)
        m, d_s = self.fuzzy_config.m, self.fuzzy_config.d_s
        self.actor = Approximator.create(
            [m * d_s, *hyper.actor_hidden, m], self.init_rng, output="sigmoid"
        )
        self.critic = Approximator.create(
            [m * d_s + m, *hyper.critic_hidden, 1], self.init_rng
        )
        self.actor_target = self.actor.copy()
        self.critic_target = self.critic.copy()
        self.actor_optimizer = Adam(self.actor, hyper.actor_lr)
        self.critic_optimizer = Adam(self.critic, hyper.critic_lr)
        self.buffer = ReplayBuffer(hyper.buffer_capacity)
        self.fuzzy: Optional[FuzzySystem] = None
        self._fuzzy_actions: Optional[FloatArray] = None

    def _system(self) -> FuzzySystem:
        if self.fuzzy is None:
            raise RuntimeError("begin_episode must run before acting")
        return self.fuzzy

    def begin_episode(self, observations: FloatArray) -> None:
        self.fuzzy = FuzzySystem.initialize(self.fuzzy_config, observations, self.fuzzy_rng)

    def act(self, observations: FloatArray, noise_scale: float) -> FloatArray:
        system = self._system()
        joint_state = system.fuzzy_states.reshape(-1)
        fuzzy_actions = explore(forward(self.actor, joint_state), noise_scale, self.exploration_rng)
        self._fuzzy_actions = fuzzy_actions.reshape(-1, 1)
        return system.defuzzify(self._fuzzy_actions)

    def observe(
        self, observations: FloatArray, actions: FloatArray, result: StepResult
    ) -> None:
        system = self._system()
        assert self._fuzzy_actions is not None
        state = system.fuzzy_states.reshape(-1).copy()
        batch = system.fuzzify(
            self._fuzzy_actions,
            result.rewards * self.hyper.reward_scale,
            result.next_observations,
        )
        self.buffer.push(
            states=state,
            actions=batch.fuzzy_actions.reshape(-1),
            rewards=float(np.mean(batch.fuzzy_rewards)),
            next_states=batch.next_fuzzy_states.reshape(-1),
        )
        system.advance(batch, result.next_observations)

    def learn(self) -> Optional[tuple[float, float]]:
        if not self.buffer.ready(self.hyper.batch_size):
            log.debug("Replay holds %d of %d transitions", len(self.buffer), self.hyper.batch_size)
            return None
        batch = self.buffer.sample(self.hyper.batch_size, self.replay_rng)
        critic_step = critic_loss_and_grad(
            self.critic,
            self.critic_target,
            lambda states: forward(self.actor_target, states),
            batch,
            self.hyper.gamma,
        )
        check_finite(critic_step.loss, self.method)
        self.critic_optimizer.step(critic_step.grads)
        actor_step = actor_grad(
            self.actor,
            self.critic,
            batch["states"],
            batch["states"],
            batch["actions"],
            slice(0, self.fuzzy_config.m),
        )
        self.actor_optimizer.step(actor_step.grads)
        soft_update(self.critic_target, self.critic, self.hyper.tau)
        soft_update(self.actor_target, self.actor, self.hyper.tau)
        return critic_step.loss, actor_step.mean_q

    def fuzzy_actions(self) -> Optional[FloatArray]:
        return self._fuzzy_actions

    def state_dict(self) -> dict[str, np.ndarray]:
        state: dict[str, np.ndarray] = {}
        for prefix, net in (
            ("actor", self.actor),
            ("actor_target", self.actor_target),
            ("critic", self.critic),
            ("critic_target", self.critic_target),
        ):
            state.update({f"{prefix}.{key}": value for key, value in net.parameters().items()})
        state.update(self.actor_optimizer.state("actor_adam"))
        state.update(self.critic_optimizer.state("critic_adam"))
        return state

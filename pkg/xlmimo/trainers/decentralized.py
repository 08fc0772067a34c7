"""
Centralized training with decentralized execution.

Every agent owns a local actor that sees only its own state; one joint
critic scores the concatenated states and actions of all agents. Agent i
keeps its own replay buffer of joint transitions carrying its own reward.

FL-CTDE runs this over the m fuzzy agents; the MADDPG baseline runs it over
the K UE agents directly.
"""

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
    critic_loss_and_grad,
    forward,
    local_actor_grads,
    soft_update,
)
from xlmimo.trainers.base import BaseTrainer
from xlmimo.trainers.environment import PowerControlEnv, StepResult
from xlmimo.trainers.fl_ctce import check_finite, explore, fuzzy_config_for
from xlmimo.utils import FloatArray

log = logging.getLogger(__name__)


class DecentralizedTrainer(BaseTrainer):
    """
    Local actors with a joint critic and per-agent replay.

    Subclasses decide who the agents are through ``agent_states``,
    ``to_ue_actions`` and ``agent_transition``.
    """

    def __init__(
        self,
        env: PowerControlEnv,
        hyper: Hyperparams,
        seed: int,
        num_agents: int,
        state_size: int,
        steps_per_episode: int = 10,
    ) -> None:
        super().__init__(env, hyper, seed, steps_per_episode)
        self.num_agents = num_agents
        self.state_size = state_size
        self.actors = [
            Approximator.create(
                [state_size, *hyper.actor_hidden, 1], self.init_rng, output="sigmoid"
            )
            for _ in range(num_agents)
        ]
        self.critic = Approximator.create(
            [num_agents * state_size + num_agents, *hyper.critic_hidden, 1], self.init_rng
        )
        self.actor_targets = [actor.copy() for actor in self.actors]
        self.critic_target = self.critic.copy()
        self.actor_optimizers = [Adam(actor, hyper.actor_lr) for actor in self.actors]
        self.critic_optimizer = Adam(self.critic, hyper.critic_lr)
        self.buffers = [ReplayBuffer(hyper.buffer_capacity) for _ in range(num_agents)]
        self._agent_actions: Optional[FloatArray] = None

    def agent_states(self, observations: FloatArray) -> FloatArray:
        """(n, state_size) states the local actors see."""
        raise NotImplementedError

    def to_ue_actions(self, agent_actions: FloatArray) -> FloatArray:
        """Map (n, 1) agent actions to (K, 1) UE actions."""
        raise NotImplementedError

    def agent_transition(
        self, agent_actions: FloatArray, result: StepResult
    ) -> tuple[FloatArray, FloatArray]:
        """Return the (n,) learner rewards and (n, state_size) next agent states."""
        raise NotImplementedError

    def _state_slice(self, agent: int) -> slice:
        return slice(agent * self.state_size, (agent + 1) * self.state_size)

    def local_actions(self, joint_states: FloatArray, actors: list[Approximator]) -> FloatArray:
        """Each actor applied to its own slice of a (B, n * state_size) batch."""
        return np.hstack(
            [forward(actor, joint_states[:, self._state_slice(i)]) for i, actor in enumerate(actors)]
        )

    def act(self, observations: FloatArray, noise_scale: float) -> FloatArray:
        states = self.agent_states(observations)
        raw = np.array([forward(actor, states[i]) for i, actor in enumerate(self.actors)])
        self._agent_actions = explore(raw.reshape(-1, 1), noise_scale, self.exploration_rng)
        return self.to_ue_actions(self._agent_actions)

    def observe(
        self, observations: FloatArray, actions: FloatArray, result: StepResult
    ) -> None:
        assert self._agent_actions is not None
        state = self.agent_states(observations).reshape(-1).copy()
        rewards, next_states = self.agent_transition(self._agent_actions, result)
        joint_actions = self._agent_actions.reshape(-1)
        for agent, buffer in enumerate(self.buffers):
            buffer.push(
                states=state,
                actions=joint_actions,
                rewards=float(rewards[agent]),
                next_states=next_states.reshape(-1),
            )

    def learn(self) -> Optional[tuple[float, float]]:
        if not all(buffer.ready(self.hyper.batch_size) for buffer in self.buffers):
            log.debug(
                "Replay holds %d of %d transitions per agent",
                len(self.buffers[0]),
                self.hyper.batch_size,
            )
            return None
        # Each agent contributes ceil(B / n) rows, so the joint batch stays near B.
        per_agent = -(-self.hyper.batch_size // self.num_agents)
        batches = [buffer.sample(per_agent, self.replay_rng) for buffer in self.buffers]
        # Equal sub-batches make this the mean of the per-agent Bellman errors.
        joint = {key: np.concatenate([batch[key] for batch in batches]) for key in batches[0]}
        critic_step = critic_loss_and_grad(
            self.critic,
            self.critic_target,
            lambda states: self.local_actions(states, self.actor_targets),
            joint,
            self.hyper.gamma,
        )
        check_finite(critic_step.loss, self.method)
        self.critic_optimizer.step(critic_step.grads)
        rows = [slice(agent * per_agent, (agent + 1) * per_agent) for agent in range(self.num_agents)]
        actor_steps = local_actor_grads(
            self.actors,
            self.critic,
            [batch["states"][:, self._state_slice(agent)] for agent, batch in enumerate(batches)],
            joint["states"],
            joint["actions"],
            rows,
        )
        for optimizer, actor_step in zip(self.actor_optimizers, actor_steps):
            optimizer.step(actor_step.grads)
        soft_update(self.critic_target, self.critic, self.hyper.tau)
        for target, actor in zip(self.actor_targets, self.actors):
            soft_update(target, actor, self.hyper.tau)
        return critic_step.loss, float(np.mean([step.mean_q for step in actor_steps]))

    def state_dict(self) -> dict[str, np.ndarray]:
        state: dict[str, np.ndarray] = {}
        named = [("critic", self.critic), ("critic_target", self.critic_target)]
        for agent in range(self.num_agents):
            named.append((f"actor{agent}", self.actors[agent]))
            named.append((f"actor{agent}_target", self.actor_targets[agent]))
        for prefix, net in named:
            state.update({f"{prefix}.{key}": value for key, value in net.parameters().items()})
        for agent, optimizer in enumerate(self.actor_optimizers):
            state.update(optimizer.state(f"actor{agent}_adam"))
        state.update(self.critic_optimizer.state("critic_adam"))
        return state


class FlCtdeTrainer(DecentralizedTrainer):
    """
    FL-CTDE trainer: m local actors, each on its own fuzzy state.
    """

    method = "fl_ctde"
    action_floor = FUZZY_ACTION_FLOOR

    def __init__(
        self,
        env: PowerControlEnv,
        hyper: Hyperparams,
        seed: int,
        fuzzy: FuzzyConfig,
        steps_per_episode: int = 10,
    ) -> None:
        fuzzy_config = fuzzy_config_for(env, fuzzy)
        super().__init__(
            env,
            hyper,
            seed,
            num_agents=fuzzy_config.m,
            state_size=fuzzy_config.d_s,
            steps_per_episode=steps_per_episode,
        )
        self.fuzzy_config = fuzzy_config
        self.fuzzy: Optional[FuzzySystem] = None

    def _system(self) -> FuzzySystem:
        if self.fuzzy is None:
            raise RuntimeError("begin_episode must run before acting")
        return self.fuzzy

    def begin_episode(self, observations: FloatArray) -> None:
        self.fuzzy = FuzzySystem.initialize(self.fuzzy_config, observations, self.fuzzy_rng)

    def agent_states(self, observations: FloatArray) -> FloatArray:
        return self._system().fuzzy_states

    def to_ue_actions(self, agent_actions: FloatArray) -> FloatArray:
        return self._system().defuzzify(agent_actions)

    def agent_transition(
        self, agent_actions: FloatArray, result: StepResult
    ) -> tuple[FloatArray, FloatArray]:
        system = self._system()
        batch = system.fuzzify(
            agent_actions,
            result.rewards * self.hyper.reward_scale,
            result.next_observations,
        )
        system.advance(batch, result.next_observations)
        return batch.fuzzy_rewards, batch.next_fuzzy_states

    def fuzzy_actions(self) -> Optional[FloatArray]:
        return self._agent_actions


class MaddpgTrainer(DecentralizedTrainer):
    """
    Plain MADDPG over the K UE agents on their raw observations.
    """

    method = "maddpg"

    def __init__(
        self,
        env: PowerControlEnv,
        hyper: Hyperparams,
        seed: int,
        steps_per_episode: int = 10,
    ) -> None:
        super().__init__(
            env,
            hyper,
            seed,
            num_agents=env.num_ue,
            state_size=env.observation_size,
            steps_per_episode=steps_per_episode,
        )

    def begin_episode(self, observations: FloatArray) -> None:
        pass

    def agent_states(self, observations: FloatArray) -> FloatArray:
        return observations

    def to_ue_actions(self, agent_actions: FloatArray) -> FloatArray:
        return agent_actions

    def agent_transition(
        self, agent_actions: FloatArray, result: StepResult
    ) -> tuple[FloatArray, FloatArray]:
        return result.rewards * self.hyper.reward_scale, result.next_observations

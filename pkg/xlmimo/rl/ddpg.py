"""
Deterministic-policy-gradient updates: Bellman critic loss, actor gradient
through the critic and soft target updates.
"""

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from xlmimo.rl.networks import Approximator, Gradients
from xlmimo.utils import FloatArray


@dataclass
class CriticStep:
    """
    Attributes:
        loss (float): Mean squared Bellman error over the batch.
        grads (Gradients): Critic gradients of the loss.
        targets (FloatArray): (B,) Bellman targets y.
    """

    loss: float
    grads: Gradients
    targets: FloatArray


@dataclass
class ActorStep:
    """
    Attributes:
        grads (Gradients): Actor gradients of -mean Q (descent direction).
        mean_q (float): Mean critic value of the batch under the current actor.
    """

    grads: Gradients
    mean_q: float


def bellman_targets(
    critic_target: Approximator,
    target_policy: Callable[[FloatArray], FloatArray],
    rewards: FloatArray,
    next_states: FloatArray,
    gamma: float,
) -> FloatArray:
    """
    y = r + gamma Q'(s', pi'(s')), evaluated with target networks only.
    """
    rewards = np.asarray(rewards, dtype=float).reshape(-1)
    if gamma == 0.0:
        return rewards
    next_actions = target_policy(next_states)
    next_q, _ = critic_target.forward_with_cache(np.hstack([next_states, next_actions]))
    return rewards + gamma * next_q[:, 0]  # type: ignore[no-any-return]


def critic_loss_and_grad(
    critic: Approximator,
    critic_target: Approximator,
    target_policy: Callable[[FloatArray], FloatArray],
    batch: dict[str, FloatArray],
    gamma: float,
) -> CriticStep:
    """
    Mean squared Bellman error and its critic gradient.

    Args:
        critic (Approximator): Evaluation critic on [state, action].
        critic_target (Approximator): Target critic.
        target_policy (Callable): Maps next joint states to next joint actions with target actors.
        batch (dict): "states", "actions", "rewards", "next_states".
        gamma (float): Discount factor.

    Returns:
        CriticStep: Loss, gradients and targets.
    """
    states = batch["states"]
    if states.shape[0] == 0:
        raise ValueError("batch must not be empty")
    targets = bellman_targets(critic_target, target_policy, batch["rewards"], batch["next_states"], gamma)
    q, cache = critic.forward_with_cache(np.hstack([states, batch["actions"]]))
    error = q[:, 0] - targets
    upstream = (2.0 / error.size) * error[:, None]
    return CriticStep(
        loss=float(np.mean(error**2)),
        grads=critic.backward(cache, upstream),
        targets=targets,
    )


def actor_grad(
    actor: Approximator,
    critic: Approximator,
    actor_inputs: FloatArray,
    states: FloatArray,
    actions: FloatArray,
    slot: slice,
) -> ActorStep:
    """
    Deterministic policy gradient of one actor through its action slot.

    The actor's output replaces ``actions[:, slot]``; the remaining slots keep
    the batch actions, so the gradient flows only through this actor.

    Args:
        actor (Approximator): The actor being trained.
        critic (Approximator): Evaluation critic on [state, action].
        actor_inputs (FloatArray): (B, actor input width) observations of this actor.
        states (FloatArray): (B, S) joint states fed to the critic.
        actions (FloatArray): (B, A) joint actions from the batch.
        slot (slice): Columns of the joint action this actor produces.

    Returns:
        ActorStep: Gradients of -mean Q and the mean Q value.
    """
    own, actor_cache = actor.forward_with_cache(actor_inputs)
    joint = np.array(actions, dtype=float, copy=True)
    joint[:, slot] = own
    q, critic_cache = critic.forward_with_cache(np.hstack([states, joint]))
    batch = q.shape[0]
    critic_grads = critic.backward(critic_cache, np.full((batch, 1), -1.0 / batch))
    action_grads = critic_grads.inputs[:, states.shape[1]:][:, slot]
    return ActorStep(grads=actor.backward(actor_cache, action_grads), mean_q=float(q.mean()))


def local_actor_grads(
    actors: Sequence[Approximator],
    critic: Approximator,
    actor_inputs: Sequence[FloatArray],
    states: FloatArray,
    actions: FloatArray,
    rows: Sequence[slice],
) -> list[ActorStep]:
    """
    Policy gradients of single-output local actors from one critic pass.

    Actor i acts on ``rows[i]`` of the joint batch and replaces action column
    i there; the other columns of those rows keep the batch actions. Each
    gradient is that of -mean Q over the actor's own rows, so it equals
    ``actor_grad`` run on that sub-batch alone.

    Args:
        actors (Sequence[Approximator]): One actor per action column.
        critic (Approximator): Evaluation critic on [state, action].
        actor_inputs (Sequence[FloatArray]): Observations of each actor for its rows.
        states (FloatArray): (B, S) joint states fed to the critic.
        actions (FloatArray): (B, n) joint actions from the batch.
        rows (Sequence[slice]): Disjoint row ranges owned by each actor.

    Returns:
        list[ActorStep]: One step per actor.
    """
    joint = np.array(actions, dtype=float, copy=True)
    caches = []
    for column, (actor, inputs, owned) in enumerate(zip(actors, actor_inputs, rows)):
        own, cache = actor.forward_with_cache(inputs)
        joint[owned, column] = own[:, 0]
        caches.append(cache)
    q, critic_cache = critic.forward_with_cache(np.hstack([states, joint]))
    upstream = np.zeros_like(q)
    for owned in rows:
        upstream[owned] = -1.0 / q[owned].shape[0]
    action_grads = critic.backward(critic_cache, upstream).inputs[:, states.shape[1]:]
    return [
        ActorStep(
            grads=actor.backward(cache, action_grads[owned, column : column + 1]),
            mean_q=float(q[owned].mean()),
        )
        for column, (actor, cache, owned) in enumerate(zip(actors, caches, rows))
    ]


def soft_update(target: Approximator, source: Approximator, tau: float) -> Approximator:
    """
    target <- (1 - tau) target + tau source, in place.

    Raises:
        ValueError: On mismatched shapes or tau outside [0, 1].
    """
    if not 0.0 <= tau <= 1.0:
        raise ValueError("tau must lie in [0, 1]")
    if target.layer_sizes != source.layer_sizes:
        raise ValueError("target and source networks must have the same shapes")
    for target_param, source_param in zip(target.parameters().values(), source.parameters().values()):
        if tau == 1.0:
            target_param[...] = source_param
        else:
            target_param += tau * (source_param - target_param)
    return target

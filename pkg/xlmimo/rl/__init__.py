"""
Function approximators, replay and actor-critic updates.
"""

from xlmimo.rl.checkpoint import load_checkpoint, save_checkpoint
from xlmimo.rl.ddpg import (
    ActorStep,
    CriticStep,
    actor_grad,
    critic_loss_and_grad,
    local_actor_grads,
    soft_update,
)
from xlmimo.rl.hyper import Hyperparams, clip_actions
from xlmimo.rl.networks import Adam, Approximator, Gradients, forward, gradients
from xlmimo.rl.replay import BufferNotReadyError, ReplayBuffer

__all__ = [
    "ActorStep",
    "Adam",
    "Approximator",
    "BufferNotReadyError",
    "CriticStep",
    "Gradients",
    "Hyperparams",
    "ReplayBuffer",
    "actor_grad",
    "clip_actions",
    "critic_loss_and_grad",
    "forward",
    "gradients",
    "load_checkpoint",
    "local_actor_grads",
    "save_checkpoint",
    "soft_update",
]

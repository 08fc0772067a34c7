"""
Fuzzy-agent abstraction over the K UE agents.

m fuzzy agents stand in for the K real agents. Each fuzzy agent owns a fuzzy
state whose entries are the centers of its fuzzy sets, one per observation
dimension. Memberships compare a real agent's observation to those centers;
their normalized products map fuzzy actions down to real agents
(defuzzification) and real rewards and states up to fuzzy agents
(fuzzification).
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from xlmimo.utils import FloatArray

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class FuzzyConfig:
    """
    Attributes:
        m (int): Number of fuzzy agents.
        d_s (int): Observation dimensionality per agent.
        d_a (int): Action dimensionality per agent.
    """

    m: int = 2
    d_s: int = 1
    d_a: int = 1

    def __post_init__(self) -> None:
        if self.m < 1 or self.d_s < 1 or self.d_a < 1:
            raise ValueError("m, d_s and d_a must be at least 1")

    @property
    def scale(self) -> float:
        """Membership decay constant d_a * m."""
        return float(self.d_a * self.m)


@dataclass(frozen=True)
class FuzzyBatch:
    """
    One step of fuzzy experience.

    Attributes:
        fuzzy_actions (FloatArray): (m, d_a) actions in [0, 1].
        fuzzy_rewards (FloatArray): (m,) fuzzified rewards.
        next_fuzzy_states (FloatArray): (m, d_s) fuzzified next states.
    """

    fuzzy_actions: FloatArray
    fuzzy_rewards: FloatArray
    next_fuzzy_states: FloatArray


def membership(center: float, x: float, d_a: int, m: int) -> float:
    """
    Membership of x in the fuzzy set centered at center: exp(-|x - center| / (d_a m)).
    """
    if d_a < 1 or m < 1:
        raise ValueError("d_a and m must be at least 1")
    return float(np.exp(-abs(x - center) / (d_a * m)))


def init_fuzzy_states(
    agent_states: FloatArray, m: int, rng: np.random.Generator
) -> FloatArray:
    """
    Sample m distinct rows of the agent states without replacement.

    Raises:
        ValueError: If m exceeds the number of agents.
    """
    num_agents = agent_states.shape[0]
    if m > num_agents:
        raise ValueError(f"m={m} fuzzy agents cannot be sampled from {num_agents} agents")
    rows = rng.choice(num_agents, size=m, replace=False)
    return agent_states[rows].copy()  # type: ignore[no-any-return]


def _normalize(log_weights: FloatArray, axis: int) -> FloatArray:
    shifted = log_weights - log_weights.max(axis=axis, keepdims=True)
    weights = np.exp(shifted)
    return weights / weights.sum(axis=axis, keepdims=True)  # type: ignore[no-any-return]


@dataclass
class MappingWeights:
    """
    Agent-to-fuzzy-agent mapping coefficients.

    Attributes:
        raw (FloatArray): (K, m) products of memberships mu_k^i.
        rows (FloatArray): (K, m), normalized over fuzzy agents; used for defuzzification.
        columns (FloatArray): (K, m), normalized over agents; used for fuzzification.
    """

    raw: FloatArray
    rows: FloatArray
    columns: FloatArray


def mapping_weights(
    agent_states: FloatArray, fuzzy_states: FloatArray, config: FuzzyConfig
) -> MappingWeights:
    """
    mu_k^i = prod_j u(x_j^k; center x_j^i) over the d_s observation dimensions.

    Both normalizations are computed in the log domain, so distant agents
    never drive a normalizer to zero.
    """
    if agent_states.shape[1] != fuzzy_states.shape[1]:
        raise ValueError("agent and fuzzy states must share their dimensionality")
    distance = np.abs(agent_states[:, None, :] - fuzzy_states[None, :, :]).sum(axis=-1)
    log_weights = -distance / config.scale
    return MappingWeights(
        raw=np.exp(log_weights),
        rows=_normalize(log_weights, axis=1),
        columns=_normalize(log_weights, axis=0),
    )


def defuzzify_actions(fuzzy_actions: FloatArray, weights: MappingWeights) -> FloatArray:
    """a_k = sum_i rows[k, i] * a_hat_i; returns (K, d_a)."""
    return weights.rows @ fuzzy_actions  # type: ignore[no-any-return]


def fuzzify_rewards(agent_rewards: FloatArray, weights: MappingWeights) -> FloatArray:
    """r_hat_i = sum_k columns[k, i] * r_k; returns (m,)."""
    return weights.columns.T @ agent_rewards  # type: ignore[no-any-return]


def fuzzify_states(next_agent_states: FloatArray, weights: MappingWeights) -> FloatArray:
    """s_hat_i = sum_k columns[k, i] * s_k per dimension; returns (m, d_s)."""
    return weights.columns.T @ next_agent_states  # type: ignore[no-any-return]


@dataclass
class FuzzySystem:
    """
    Fuzzy states and the current mapping weights of an episode.

    The fuzzy states double as the fuzzy-set centers; ``advance`` moves both
    to the fuzzified next states and recomputes the weights.
    """

    config: FuzzyConfig
    fuzzy_states: FloatArray
    weights: MappingWeights = field(init=False)

    def __post_init__(self) -> None:
        if self.fuzzy_states.shape != (self.config.m, self.config.d_s):
            raise ValueError("fuzzy_states must be (m, d_s)")

    @classmethod
    def initialize(
        cls, config: FuzzyConfig, agent_states: FloatArray, rng: np.random.Generator
    ) -> "FuzzySystem":
        """Sample fuzzy states from the observations and compute the first weights."""
        system = cls(config=config, fuzzy_states=init_fuzzy_states(agent_states, config.m, rng))
        system.remap(agent_states)
        return system

    def remap(self, agent_states: FloatArray) -> MappingWeights:
        """Recompute the weights of agent states against the current centers."""
        self.weights = mapping_weights(agent_states, self.fuzzy_states, self.config)
        return self.weights

    def defuzzify(self, fuzzy_actions: FloatArray) -> FloatArray:
        return defuzzify_actions(fuzzy_actions, self.weights)

    def fuzzify(
        self,
        fuzzy_actions: FloatArray,
        agent_rewards: FloatArray,
        next_agent_states: FloatArray,
    ) -> FuzzyBatch:
        """Map rewards and next states up with the weights of the current step."""
        return FuzzyBatch(
            fuzzy_actions=fuzzy_actions,
            fuzzy_rewards=fuzzify_rewards(agent_rewards, self.weights),
            next_fuzzy_states=fuzzify_states(next_agent_states, self.weights),
        )

    def advance(self, batch: FuzzyBatch, next_agent_states: FloatArray) -> None:
        """Move the centers to the next fuzzy states and refresh the membership functions."""
        self.fuzzy_states = batch.next_fuzzy_states.copy()
        self.remap(next_agent_states)

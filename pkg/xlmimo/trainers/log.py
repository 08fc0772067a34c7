"""
Per-episode training records and their CSV form.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np
import pandas as pd

from xlmimo.utils import FloatArray

FLOAT_FORMAT = "%.12g"


@dataclass
class EpisodeRecord:
    """
    Attributes:
        episode (int): Zero-based episode index.
        sum_se (float): Mean over steps of the sum-SE.
        ue_se (FloatArray): (K,) mean over steps of each UE's SE.
        power_watts (float): Mean over steps of sum_k N_s p_k.
        wall_ms (float): Wall time of the episode loop.
        ue_power (FloatArray): (steps, K) logged N_s p_k per step.
        agent_actions (FloatArray): (steps, K) actions handed to the environment.
        fuzzy_actions (FloatArray | None): (steps, m) fuzzy-agent actions, if any.
        critic_loss (float): Mean critic loss of the updates, NaN before the first update.
        actor_q (float): Mean critic value seen by the actor updates, NaN before the first update.
    """

    episode: int
    sum_se: float
    ue_se: FloatArray
    power_watts: float
    wall_ms: float
    ue_power: FloatArray
    agent_actions: FloatArray
    fuzzy_actions: Optional[FloatArray] = None
    critic_loss: float = float("nan")
    actor_q: float = float("nan")


@dataclass
class TrainingLog:
    """
    All episode records of one run.
    """

    num_ue: int
    records: list[EpisodeRecord] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)

    def append(self, record: EpisodeRecord) -> None:
        self.records.append(record)

    @property
    def sum_se(self) -> FloatArray:
        return np.array([r.sum_se for r in self.records])

    @property
    def power_watts(self) -> FloatArray:
        return np.array([r.power_watts for r in self.records])

    @property
    def wall_ms(self) -> FloatArray:
        return np.array([r.wall_ms for r in self.records])

    @property
    def critic_loss(self) -> FloatArray:
        return np.array([r.critic_loss for r in self.records])

    def final_mean(self, window: int = 100) -> float:
        """Mean sum-SE over the last ``window`` episodes, NaN if empty."""
        if not self.records:
            return float("nan")
        return float(np.mean(self.sum_se[-window:]))

    def se_columns(self) -> list[str]:
        return [f"se_ue{k}" for k in range(self.num_ue)]

    def to_frame(self) -> pd.DataFrame:
        """
        One row per episode: episode, sum_se, se_ue0..se_ue{K-1}, power_watts.
        """
        columns = ["episode", "sum_se", *self.se_columns(), "power_watts"]
        rows = [
            [r.episode, r.sum_se, *np.asarray(r.ue_se).tolist(), r.power_watts]
            for r in self.records
        ]
        frame = pd.DataFrame(rows, columns=columns)
        return frame.astype({"episode": "int64"})

    def timings_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(
            {"episode": [r.episode for r in self.records], "wall_ms": self.wall_ms}
        )
        return frame.astype({"episode": "int64"})

    def write(self, log_path: Path, timings_path: Path) -> None:
        """Write the deterministic log and the wall-time side file."""
        log_path.parent.mkdir(parents=True, exist_ok=True)
        self.to_frame().to_csv(log_path, index=False, float_format=FLOAT_FORMAT)
        self.timings_frame().to_csv(timings_path, index=False, float_format=FLOAT_FORMAT)

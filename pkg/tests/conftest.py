"""
Shared fixtures for the xlmimo tests.
"""

from pathlib import Path
from typing import Any

import numpy as np
import pytest

from test_utils.envs import EnvFactory
from xlmimo.channel import NetworkConfig
from xlmimo.rl import Hyperparams
from xlmimo.trainers import PowerControlEnv
from xlmimo.utils import derive_rng


@pytest.fixture(autouse=True)
def small_run_settings(settings: Any, tmp_path: Path) -> Path:
    """Keep artifacts in a temporary root and runs small."""
    settings.XLMIMO_OUTPUT_ROOT = str(tmp_path / "results")
    settings.XLMIMO_TRAIN_N_MC = 2
    settings.XLMIMO_EVAL_N_MC = 4
    settings.XLMIMO_EVAL_LAYOUTS = 2
    settings.XLMIMO_STEPS_PER_EPISODE = 2
    return Path(settings.XLMIMO_OUTPUT_ROOT)


@pytest.fixture(name="rng")
def get_rng() -> np.random.Generator:
    """A fixed-seed generator."""
    return np.random.default_rng(1234)


@pytest.fixture(name="tiny_config")
def get_tiny_config() -> NetworkConfig:
    """
    Two BSs side by side, two single-antenna UEs, 2x2 BS arrays.
    """
    return NetworkConfig(
        num_bs=2, num_ue=2, n_hr=2, n_vr=2, n_hs=1, n_vs=1, bs_grid=(1, 2)
    )


@pytest.fixture(name="desk_config")
def get_desk_config() -> NetworkConfig:
    """Four BSs with 4x4 arrays serving three UEs with 2x2 arrays."""
    return NetworkConfig()


@pytest.fixture(name="small_hyper")
def get_small_hyper() -> Hyperparams:
    """Hyperparameters small enough that learning starts within a few episodes."""
    return Hyperparams(
        batch_size=4,
        buffer_capacity=50,
        actor_hidden=(8,),
        critic_hidden=(8,),
    )


@pytest.fixture(name="make_env")
def get_make_env() -> EnvFactory:
    """
    Factory of environments seeded from a master seed.
    """

    def make_env(
        config: NetworkConfig,
        combiner: str = "mr",
        n_mc: int = 2,
        seed: int = 7,
        reward: str = "sum_se",
    ) -> PowerControlEnv:
        return PowerControlEnv(
            config,
            combiner,
            n_mc,
            layout_rng=derive_rng(seed, "layout"),
            channel_rng=derive_rng(seed, "channel"),
            reward=reward,
        )

    return make_env

"""
Type aliases for environment fixtures.
"""

from typing import Callable

from xlmimo.trainers import PowerControlEnv

EnvFactory = Callable[..., PowerControlEnv]

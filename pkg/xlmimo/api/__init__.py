"""
Native Python APIs of the simulator.
"""

from xlmimo.api.bench import bench_runtime
from xlmimo.api.cdf import emit_cdf, empirical_cdf
from xlmimo.api.experiments import (
    ExperimentResult,
    load_experiment,
    run_experiment,
    run_experiment_data,
    validate_experiment,
)
from xlmimo.api.reproduce import reproduce_paper

__all__ = [
    "ExperimentResult",
    "bench_runtime",
    "emit_cdf",
    "empirical_cdf",
    "load_experiment",
    "reproduce_paper",
    "run_experiment",
    "run_experiment_data",
    "validate_experiment",
]

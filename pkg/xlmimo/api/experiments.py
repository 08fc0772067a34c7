"""
API for running experiments.
"""

import json
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Union

from django.conf import settings

from xlmimo import __version__
from xlmimo.constants import (
    CHECKPOINT_FILENAME,
    EVALUATION_FILENAME,
    LOG_FILENAME,
    SUMMARY_FILENAME,
    TIMINGS_FILENAME,
)
from xlmimo.fuzzy import FuzzyConfig
from xlmimo.rl import Hyperparams, save_checkpoint
from xlmimo.serializers import ExperimentSerializer, network_config
from xlmimo.trainers import (
    BaseTrainer,
    PowerControlEnv,
    TrainingLog,
    build_evaluation_set,
    build_trainer,
    evaluate_policy,
    grid_search_power,
)
from xlmimo.trainers.log import FLOAT_FORMAT
from xlmimo.utils import ExperimentRequestError, NumericalFailureError, derive_rng

log = logging.getLogger(__name__)


@dataclass
class ExperimentResult:
    """
    Attributes:
        output_dir (Path): Where the artifacts were written.
        summary (dict): Content of the JSON summary.
        log (TrainingLog): Per-episode records.
    """

    output_dir: Path
    summary: dict[str, Any]
    log: TrainingLog


def load_experiment(config_path: Union[str, Path]) -> dict[str, Any]:
    """
    Read an experiment document.

    Raises:
        ExperimentRequestError: If the file is missing or is not a JSON object.
    """
    try:
        with open(config_path, encoding="utf8") as handle:
            data = json.load(handle)
    except OSError as error:
        raise ExperimentRequestError(f"Cannot read {config_path}: {error}") from error
    except json.JSONDecodeError as error:
        raise ExperimentRequestError(f"{config_path} is not valid JSON: {error}") from error
    if not isinstance(data, dict):
        raise ExperimentRequestError("The experiment document must be a JSON object")
    return data


def validate_experiment(data: dict[str, Any]) -> dict[str, Any]:
    """
    Validate an experiment document and resolve every default.

    Returns:
        dict: The resolved configuration; running it again reproduces the run.

    Raises:
        ExperimentRequestError: With the serializer's field-level errors.
    """
    serializer = ExperimentSerializer(data=data)
    if not serializer.is_valid():
        raise ExperimentRequestError(serializer.errors)
    config = json.loads(json.dumps(serializer.validated_data))
    training = config["training"]
    if training["n_mc"] is None:
        training["n_mc"] = settings.XLMIMO_TRAIN_N_MC
    if training["steps_per_episode"] is None:
        training["steps_per_episode"] = settings.XLMIMO_STEPS_PER_EPISODE
    evaluation = config["evaluation"]
    if evaluation["layouts"] is None:
        evaluation["layouts"] = settings.XLMIMO_EVAL_LAYOUTS
    if evaluation["n_mc"] is None:
        evaluation["n_mc"] = settings.XLMIMO_EVAL_N_MC
    return config  # type: ignore[no-any-return]


def resolve_output_dir(output_dir: str) -> Path:
    """Relative directories live under XLMIMO_OUTPUT_ROOT."""
    path = Path(output_dir)
    if path.is_absolute():
        return path
    return Path(settings.XLMIMO_OUTPUT_ROOT) / path


def build_environment(config: dict[str, Any]) -> PowerControlEnv:
    """The environment of a resolved configuration, seeded from its master seed."""
    try:
        network = network_config(config["network"])
    except ValueError as error:
        raise ExperimentRequestError({"network": [str(error)]}) from error
    seed = config["seed"]
    return PowerControlEnv(
        network,
        config["combiner"],
        config["training"]["n_mc"],
        layout_rng=derive_rng(seed, "layout"),
        channel_rng=derive_rng(seed, "channel"),
        reward=config["reward"],
    )


def build_experiment_trainer(config: dict[str, Any], env: PowerControlEnv) -> BaseTrainer:
    try:
        return build_trainer(
            config["method"],
            env,
            Hyperparams(**config["hyper"]),
            config["seed"],
            FuzzyConfig(**config["fuzzy"]),
            config["training"]["steps_per_episode"],
        )
    except ValueError as error:
        raise ExperimentRequestError(str(error)) from error


def _json_number(value: float) -> Optional[float]:
    return None if math.isnan(value) else value


def _write_summary(path: Path, summary: dict[str, Any]) -> None:
    with open(path, "w", encoding="utf8") as handle:
        json.dump(summary, handle, sort_keys=True, indent=2)
        handle.write("\n")


def run_experiment_data(data: dict[str, Any]) -> ExperimentResult:
    """
    Train, evaluate and write the artifacts of one experiment document.

    Writes log.csv, timings.csv, checkpoint.npz, summary.json and, when
    evaluation layouts are requested, evaluation.csv.

    Raises:
        ExperimentRequestError: If the document is invalid.
        NumericalFailureError: If training breaks down; the completed
            episodes are written before it propagates.
    """
    config = validate_experiment(data)
    output_dir = resolve_output_dir(config["output_dir"])
    output_dir.mkdir(parents=True, exist_ok=True)
    env = build_environment(config)
    trainer = build_experiment_trainer(config, env)
    log.info(
        "Running %s with %s combining for %d episodes into %s",
        config["method"],
        config["combiner"],
        config["episodes"],
        output_dir,
    )
    summary: dict[str, Any] = {
        "config": config,
        "method": config["method"],
        "combiner": config["combiner"],
        "episodes": config["episodes"],
        "seed": config["seed"],
        "version": __version__,
    }
    try:
        training_log = trainer.train(config["episodes"])
    except NumericalFailureError:
        trainer.log.write(output_dir / LOG_FILENAME, output_dir / TIMINGS_FILENAME)
        summary.update(
            status="failed",
            completed_episodes=len(trainer.log),
            final_mean_sum_se=_json_number(trainer.log.final_mean()),
        )
        _write_summary(output_dir / SUMMARY_FILENAME, summary)
        log.error("Run aborted after %d episodes; partial log in %s", len(trainer.log), output_dir)
        raise

    training_log.write(output_dir / LOG_FILENAME, output_dir / TIMINGS_FILENAME)
    save_checkpoint(output_dir / CHECKPOINT_FILENAME, trainer.state_dict())
    summary.update(
        status="completed",
        completed_episodes=len(training_log),
        final_mean_sum_se=_json_number(training_log.final_mean()),
        final_mean_power_watts=_json_number(
            float(training_log.power_watts[-100:].mean()) if len(training_log) else float("nan")
        ),
    )

    evaluation = config["evaluation"]
    if evaluation["layouts"] > 0:
        drops = build_evaluation_set(
            env, evaluation["layouts"], evaluation["n_mc"], derive_rng(config["seed"], "evaluation")
        )
        frame = evaluate_policy(trainer.policy, env, drops, trainer.action_floor)
        frame.to_csv(output_dir / EVALUATION_FILENAME, index=False, float_format=FLOAT_FORMAT)
        summary["evaluation_mean_sum_se"] = float(frame["sum_se"].mean())
        if evaluation["grid_levels"] > 0:
            oracle = grid_search_power(env, drops, evaluation["grid_levels"])
            summary["oracle_mean_sum_se"] = oracle.mean_sum_se

    _write_summary(output_dir / SUMMARY_FILENAME, summary)
    log.info("Artifacts of %s written to %s", config["method"], output_dir)
    return ExperimentResult(output_dir=output_dir, summary=summary, log=training_log)


def run_experiment(config_path: Union[str, Path]) -> ExperimentResult:
    """
    Run the experiment described by a JSON file.

    Args:
        config_path (str | Path): Path to the experiment document.

    Returns:
        ExperimentResult: Output directory, summary and log.
    """
    return run_experiment_data(load_experiment(config_path))

"""Management command for running one experiment"""

from argparse import ArgumentParser
from typing import Any

from django.core.management.base import BaseCommand

from xlmimo.api.experiments import run_experiment
from xlmimo.utils import command_errors


class Command(BaseCommand):
    help = "Train and evaluate one power-control experiment described by a JSON file."

    def add_arguments(self, parser: ArgumentParser) -> None:
        """
        Adds command line arguments to the run command.

        Args:
            parser: The argument parser to which the config path is added.
        """
        parser.add_argument("config", help="Path to the experiment JSON document.")

    def handle(self, *args: list[str], **kwargs: Any) -> None:
        """
        Runs the experiment and reports where its artifacts went.

        Exits with code 2 on an invalid document and 3 on numerical failure,
        after the completed episodes have been written.
        """
        with command_errors():
            result = run_experiment(kwargs["config"])
        self.stdout.write(
            self.style.SUCCESS(
                f"Experiment finished: mean sum-SE {result.summary['final_mean_sum_se']}, "
                f"artifacts in {result.output_dir}"
            )
        )

"""Management command for regenerating every comparison table"""

from argparse import ArgumentParser
from typing import Any

from django.core.management.base import BaseCommand

from xlmimo.api.reproduce import SCALES, reproduce_paper
from xlmimo.utils import command_errors, get_int_value_from_collection


class Command(BaseCommand):
    help = "Run every method with both combiners and emit CDFs, power traces and runtimes."

    def add_arguments(self, parser: ArgumentParser) -> None:
        """
        Adds command line arguments to the reproduce command.

        Args:
            parser: The argument parser to which --scale, --out, --episodes and --seed are added.
        """
        parser.add_argument("--scale", choices=sorted(SCALES), default="desk")
        parser.add_argument("--out", required=True, help="Output directory.")
        parser.add_argument(
            "--episodes", type=int, default=None, help="Override the episode count of the scale."
        )
        parser.add_argument("--seed", type=int, default=0, help="Master seed of every run.")

    def handle(self, *args: list[str], **kwargs: Any) -> None:
        """
        Handles the execution of the reproduce command.

        Args:
            args: Additional arguments.
            kwargs: Command options.
        """
        with command_errors():
            results = reproduce_paper(
                kwargs["scale"],
                kwargs["out"],
                episodes=kwargs["episodes"],
                seed=get_int_value_from_collection(kwargs, "seed", 0),
            )
        self.stdout.write(
            self.style.SUCCESS(f"{len(results)} runs written to {kwargs['out']}")
        )

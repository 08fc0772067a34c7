"""Management command for the runtime comparison"""

from argparse import ArgumentParser
from typing import Any

from django.core.management.base import BaseCommand

from xlmimo.api.bench import bench_runtime
from xlmimo.constants import COMBINERS, LEARNED_METHODS
from xlmimo.utils import command_errors


class Command(BaseCommand):
    help = "Measure mean wall time per episode of the learned methods with both combiners."

    def add_arguments(self, parser: ArgumentParser) -> None:
        """
        Adds command line arguments to the bench command.

        Args:
            parser: The argument parser to which the config path, --episodes,
                --methods, --combiners and --out are added.
        """
        parser.add_argument("config", help="Path to the experiment JSON document.")
        parser.add_argument("--episodes", type=int, default=None, help="Episodes per run.")
        parser.add_argument(
            "--methods", nargs="+", choices=LEARNED_METHODS, default=list(LEARNED_METHODS)
        )
        parser.add_argument("--combiners", nargs="+", choices=COMBINERS, default=list(COMBINERS))
        parser.add_argument("--out", default=None, help="Where to write runtime.csv.")

    def handle(self, *args: list[str], **kwargs: Any) -> None:
        with command_errors():
            table = bench_runtime(
                kwargs["config"],
                episodes=kwargs["episodes"],
                methods=kwargs["methods"],
                combiners=kwargs["combiners"],
                out=kwargs["out"],
            )
        self.stdout.write(table.to_csv(index=False, float_format="%.12g"), ending="")

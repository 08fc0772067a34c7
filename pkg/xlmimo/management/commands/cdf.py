"""Management command for empirical CDF tables"""

from argparse import ArgumentParser
from typing import Any

from django.core.management.base import BaseCommand

from xlmimo.api.cdf import emit_cdf
from xlmimo.utils import command_errors


class Command(BaseCommand):
    help = "Build the empirical CDF of the sum-SE column over one or more logs."

    def add_arguments(self, parser: ArgumentParser) -> None:
        """
        Adds command line arguments to the cdf command.

        Args:
            parser: The argument parser to which the log paths and --out are added.
        """
        parser.add_argument("logs", nargs="+", help="Evaluation or training CSV logs.")
        parser.add_argument(
            "--out",
            default=None,
            help="Write the table here instead of standard output.",
        )

    def handle(self, *args: list[str], **kwargs: Any) -> None:
        with command_errors():
            table = emit_cdf(kwargs["logs"], kwargs["out"])
        if kwargs["out"] is None:
            self.stdout.write(table.to_csv(index=False, float_format="%.12g"), ending="")
        else:
            self.stdout.write(self.style.SUCCESS(f"CDF written to {kwargs['out']}"))

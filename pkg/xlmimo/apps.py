"""
xlmimo Django application initialization.
"""

from django.apps import AppConfig
from django.conf import settings


class XlMimoConfig(AppConfig):
    """
    Configuration for the xlmimo Django application.
    """

    name = "xlmimo"
    verbose_name = "Cell-free XL-MIMO power control"

    def ready(self) -> None:
        """Fill in the run defaults a host project leaves unset."""
        # pylint: disable=import-outside-toplevel
        from xlmimo.settings.common import plugin_settings

        plugin_settings(settings)

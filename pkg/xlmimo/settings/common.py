"""
Common settings for xlmimo app.
"""

import os
from typing import Any


def plugin_settings(settings: Any) -> None:
    """
    Common settings for xlmimo app
    """
    settings.XLMIMO_OUTPUT_ROOT = os.environ.get(
        "XLMIMO_OUTPUT_ROOT", getattr(settings, "XLMIMO_OUTPUT_ROOT", "results")
    )
    settings.XLMIMO_TRAIN_N_MC = getattr(settings, "XLMIMO_TRAIN_N_MC", 20)
    settings.XLMIMO_EVAL_N_MC = getattr(settings, "XLMIMO_EVAL_N_MC", 200)
    settings.XLMIMO_EVAL_LAYOUTS = getattr(settings, "XLMIMO_EVAL_LAYOUTS", 200)
    settings.XLMIMO_STEPS_PER_EPISODE = getattr(
        settings, "XLMIMO_STEPS_PER_EPISODE", 10
    )

"""
These settings are here to use during tests and from manage.py, because django requires them.

The simulator stores nothing in a database; results are CSV and JSON files
under XLMIMO_OUTPUT_ROOT.
"""

import os

DATABASES: dict[str, dict[str, str]] = {}

INSTALLED_APPS = (
    "django.contrib.contenttypes",
    "xlmimo",
)

SECRET_KEY = "insecure-secret-key"

USE_TZ = True

XLMIMO_OUTPUT_ROOT = os.environ.get("XLMIMO_OUTPUT_ROOT", "results")
XLMIMO_TRAIN_N_MC = 20
XLMIMO_EVAL_N_MC = 200
XLMIMO_EVAL_LAYOUTS = 200
XLMIMO_STEPS_PER_EPISODE = 10

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "standard": {
            "format": "%(asctime)s %(levelname)s %(process)d [%(name)s] %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "standard",
        },
    },
    "loggers": {
        "xlmimo": {
            "handlers": ["console"],
            "level": os.environ.get("XLMIMO_LOG_LEVEL", "INFO"),
            "propagate": True,
        },
    },
}

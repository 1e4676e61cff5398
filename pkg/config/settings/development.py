"""Development settings."""

from .base import *  # noqa: F401, F403

DEBUG = True

LOGGING["loggers"]["core"]["level"] = "INFO"  # noqa: F405
LOGGING["loggers"]["apps"]["level"] = "INFO"  # noqa: F405

"""Production settings for batch runs on shared hosts."""

import os

from .base import *  # noqa: F401, F403

DEBUG = False

MAX_WORKERS = int(os.getenv("MAX_WORKERS", str(os.cpu_count() or 1)))

# JSON structured logs
LOGGING["handlers"]["console"]["formatter"] = "json"  # noqa: F405
LOGGING["root"]["handlers"] = ["console"]  # noqa: F405

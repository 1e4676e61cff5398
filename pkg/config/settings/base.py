"""
Base settings for the subcity commuter-network toolkit.
"""

import json
import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

BASE_DIR = Path(__file__).resolve().parent.parent.parent

SECRET_KEY = os.getenv("DJANGO_SECRET_KEY", "subcity-has-no-web-surface")

VERSION = "1.0.0"

# ---------------------------------------------------------------------------
# Application definition
# ---------------------------------------------------------------------------

INSTALLED_APPS = [
    "apps.pipeline",
]

# No models are stored; Django provides settings, logging and the command runner.
DATABASES = {}

USE_TZ = True
TIME_ZONE = "UTC"

# ---------------------------------------------------------------------------
# Geography
# ---------------------------------------------------------------------------

# UTM zone assumed for node files that carry easting/northing without zone columns
# (Santiago de Chile: 19 South).
DEFAULT_UTM_ZONE = int(os.getenv("DEFAULT_UTM_ZONE", "19"))
DEFAULT_HEMISPHERE = os.getenv("DEFAULT_HEMISPHERE", "S")

# IUGG mean Earth radius used by the haversine distance.
EARTH_RADIUS_KM = float(os.getenv("EARTH_RADIUS_KM", "6371.0088"))

COORDINATE_DECIMALS = int(os.getenv("COORDINATE_DECIMALS", "12"))

# ---------------------------------------------------------------------------
# Community detection
# ---------------------------------------------------------------------------

LOUVAIN_MIN_IMPROVEMENT = float(os.getenv("LOUVAIN_MIN_IMPROVEMENT", "1e-12"))
DEFAULT_RESOLUTIONS = json.loads(os.getenv("DEFAULT_RESOLUTIONS", "[0.25, 0.5, 1.0, 1.5, 2.0]"))

# ---------------------------------------------------------------------------
# Centrality
# ---------------------------------------------------------------------------

EIGENVECTOR_TOL = float(os.getenv("EIGENVECTOR_TOL", "1e-10"))
EIGENVECTOR_MAX_ITER = int(os.getenv("EIGENVECTOR_MAX_ITER", "10000"))
TELEPORT_DAMPING = float(os.getenv("TELEPORT_DAMPING", "0.15"))

# Segregation null model
MONTE_CARLO_TRIALS = int(os.getenv("MONTE_CARLO_TRIALS", "1000"))

# ---------------------------------------------------------------------------
# Parallel work
# ---------------------------------------------------------------------------

MAX_WORKERS = int(os.getenv("MAX_WORKERS", "1"))
# Fixed chunking keeps reductions identical for any worker count.
WORK_CHUNK_SIZE = int(os.getenv("WORK_CHUNK_SIZE", "32"))

# ---------------------------------------------------------------------------
# Logging
# ---------------------------------------------------------------------------

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{levelname} {asctime} {module} {process:d} {message}",
            "style": "{",
        },
        "json": {
            "()": "pythonjsonlogger.jsonlogger.JsonFormatter",
            "format": "%(asctime)s %(name)s %(levelname)s %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
            "stream": "ext://sys.stderr",
        },
        "json_console": {
            "class": "logging.StreamHandler",
            "formatter": "json",
            "stream": "ext://sys.stderr",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": "WARNING",
    },
    "loggers": {
        "django": {"handlers": ["console"], "level": "WARNING", "propagate": False},
        "apps": {"handlers": ["json_console"], "level": os.getenv("SUBCITY_LOG_LEVEL", "WARNING"), "propagate": False},
        "core": {"handlers": ["json_console"], "level": os.getenv("SUBCITY_LOG_LEVEL", "WARNING"), "propagate": False},
    },
}

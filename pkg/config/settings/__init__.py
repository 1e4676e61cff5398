"""Settings entry point; ``DJANGO_ENV`` picks the profile (development by default)."""

import os

if os.getenv("DJANGO_ENV", "development").lower() == "production":
    from .production import *  # noqa: F401, F403
else:
    from .development import *  # noqa: F401, F403

"""Shared behaviour of the subcity subcommands."""

from __future__ import annotations

import argparse
import json
import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from apps.pipeline.config import RunConfig
from apps.pipeline.services import PipelineRunner
from core.exceptions import InputError, SubcityError

logger = logging.getLogger(__name__)

VERBOSITY_LEVELS = {0: logging.ERROR, 1: logging.WARNING, 2: logging.INFO, 3: logging.DEBUG}


def resolution_list(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from exc


class SubcityCommand(BaseCommand):
    """Validates options into a ``RunConfig``, runs it and prints a JSON summary line.

    Input problems leave with exit status 2 and numeric failures with 1.
    """

    subcommand: str = ""
    parallel = False
    requires_system_checks: list[str] = []

    def get_version(self) -> str:
        return f"subcity {settings.VERSION}"

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        if self.parallel:
            parser.add_argument("--workers", type=int, help="Worker processes (results do not depend on it)")
        return parser

    # argument groups reused by several subcommands

    def add_variant_arguments(self, parser) -> None:
        direction = parser.add_mutually_exclusive_group()
        direction.add_argument("--directed", dest="directed", action="store_true", default=None)
        direction.add_argument("--undirected", dest="directed", action="store_false")
        weighting = parser.add_mutually_exclusive_group()
        weighting.add_argument("--weighted", dest="weighted", action="store_true", default=None)
        weighting.add_argument("--unweighted", dest="weighted", action="store_false")

    def add_geo_arguments(self, parser) -> None:
        parser.add_argument("--zone", type=int, help="UTM zone for rows without a zone column")
        parser.add_argument("--hemisphere", choices=["N", "S"], help="UTM hemisphere for rows without one")

    def _configure_logging(self, verbosity: int) -> None:
        # default verbosity keeps the level from settings (SUBCITY_LOG_LEVEL)
        if verbosity == 1:
            return
        level = VERBOSITY_LEVELS.get(verbosity, logging.DEBUG)
        for name in ("core", "apps"):
            logging.getLogger(name).setLevel(level)

    def execute(self, *args, **options):
        self._configure_logging(options.get("verbosity", 1))
        try:
            return super().execute(*args, **options)
        except InputError as exc:
            raise CommandError(str(exc), returncode=exc.exit_code) from exc
        except SubcityError as exc:
            logger.error("%s failed: %s", self.subcommand, exc)
            raise CommandError(str(exc), returncode=exc.exit_code) from exc

    def handle(self, *args, **options):
        config = RunConfig.from_options(self.subcommand, options)
        summary = PipelineRunner(config).run()
        self.stdout.write(json.dumps(summary, sort_keys=True, default=str))

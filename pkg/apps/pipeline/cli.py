"""``subcity`` console entry point.

Routes ``subcity <subcommand> [options]`` to the matching management command.
Exit status: 0 success, 1 runtime or numeric failure, 2 input or usage error.
"""

from __future__ import annotations

import logging
import os
import sys
from collections.abc import Sequence

SUBCOMMANDS = (
    "convert",
    "build",
    "detect",
    "sweep",
    "compare",
    "centrality",
    "geo-stats",
    "segregation",
    "synth",
    "export",
)

logger = logging.getLogger(__name__)


def usage() -> str:
    lines = ["usage: subcity <subcommand> [options]", "", "subcommands:"]
    lines += [f"  {name}" for name in SUBCOMMANDS]
    lines += ["", "Run 'subcity <subcommand> --help' for the options of one subcommand."]
    return "\n".join(lines) + "\n"


def _exit_code(exc: SystemExit) -> int:
    if exc.code is None:
        return 0
    return exc.code if isinstance(exc.code, int) else 1


def dispatch(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings")

    import django
    from django.conf import settings
    from django.core.management import load_command_class

    django.setup()

    if not argv:
        sys.stderr.write(usage())
        return 2
    name, rest = argv[0], argv[1:]
    if name in ("-h", "--help", "help"):
        sys.stdout.write(usage())
        return 0
    if name == "--version":
        sys.stdout.write(f"subcity {settings.VERSION}\n")
        return 0
    if name not in SUBCOMMANDS:
        sys.stderr.write(f"subcity: unknown subcommand {name!r}\n\n{usage()}")
        return 2

    command = load_command_class("apps.pipeline", name.replace("-", "_"))
    try:
        command.run_from_argv(["subcity", name, *rest])
    except SystemExit as exc:
        return _exit_code(exc)
    except Exception:
        logger.exception("Subcommand %s failed", name)
        return 1
    return 0


def main() -> None:
    sys.exit(dispatch())

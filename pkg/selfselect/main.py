"""
Selfselect Verifier - Main Entry Point.

This module serves as the entry point of the ``selfselect`` command. It
configures logging and hands the command line to the CLI package.
"""

import asyncio
import logging
import sys
from collections.abc import Sequence
from typing import NoReturn

from selfselect.cli.commands import run_cli

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def configure_logging(level: str) -> None:
    """
    Configure root logging.

    Records go to stderr so that stdout carries only command output.

    Args:
        level: Logging level name, e.g. ``"INFO"``.
    """
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format=LOG_FORMAT,
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


async def async_main(argv: Sequence[str] | None = None) -> int:
    """
    Async entry point for programmatic usage.

    Args:
        argv: Command-line arguments without the program name; defaults
            to ``sys.argv[1:]``.

    Returns:
        The process exit code.
    """
    return await run_cli(argv, configure=configure_logging)


def main() -> NoReturn:
    """
    Main entry point for the ``selfselect`` command.

    Returns:
        NoReturn: Exits with the command's exit code.
    """
    sys.exit(asyncio.run(async_main()))


if __name__ == "__main__":
    main()

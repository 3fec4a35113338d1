"""
Selfselect Verifier - CLI Package.

This package contains the ``selfselect`` command-line surface: argument
parsing, the subcommands and output rendering.
"""

from selfselect.cli.commands import COMMANDS, ExitCode, exit_code_for, run_cli
from selfselect.cli.parser import (
    Invocation,
    OutputFormat,
    Subcommand,
    build_parser,
    parse_invocation,
)

__all__ = [
    "COMMANDS",
    "ExitCode",
    "exit_code_for",
    "run_cli",
    "Invocation",
    "OutputFormat",
    "Subcommand",
    "build_parser",
    "parse_invocation",
]

"""
Selfselect Verifier - Command-Line Parser.

This module defines the ``selfselect`` argument parser and the validated
Invocation every subcommand runs from. Flags left unset fall back to the
environment settings.
"""

import argparse
from collections.abc import Sequence
from enum import Enum
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, model_validator

from selfselect.core.axioms import Axiom
from selfselect.core.config import Settings
from selfselect.core.theorems import Campaign
from selfselect.models.universe import DomainKind, Universe


class Subcommand(str, Enum):
    """CLI subcommands."""

    EVAL = "eval"
    AXIOMS = "axioms"
    SELFSELECT = "selfselect"
    VERIFY = "verify"
    EXPORT_TABLE = "export-table"


class OutputFormat(str, Enum):
    """Output formats."""

    TEXT = "text"
    JSON = "json"


class Invocation(BaseModel):
    """
    A fully resolved command line.

    Attributes:
        subcommand: Subcommand to run.
        rule: Rule spec string, for rule subcommands.
        profile_path: Profile file, for ``eval``.
        campaign: Campaign, for ``verify``.
        axioms: Axioms to check; empty means every applicable axiom.
        n: Voter count.
        tau_min: Smallest alternative-set size.
        tau_max: Largest alternative-set size.
        domain: Requested domain kind, if any.
        k: Largest rule-set size, if requested.
        seed_start: First sampled seed.
        seed_count: Number of sampled seeds.
        jobs: Campaign worker count.
        universal: Check universal instead of binary self-selectivity.
        vacuous_pass: Count an empty compatible set as self-selection.
        full_group: Check symmetry axioms over the full groups.
        include_same_outcome: Include rivals agreeing with the rule.
        output: Output file; stdout when unset.
        save: Write campaign reports to the report directory.
        output_format: Output format.
        log_level: Logging level.
    """

    subcommand: Subcommand = Field(..., description="Subcommand")
    rule: str | None = Field(default=None, description="Rule spec")
    profile_path: Path | None = Field(default=None, description="Profile file")
    campaign: Campaign | None = Field(default=None, description="Campaign")
    axioms: list[Axiom] = Field(default_factory=list, description="Axioms to check")
    n: int = Field(..., ge=2, description="Voter count")
    tau_min: int = Field(default=1, ge=1, description="Smallest alternative-set size")
    tau_max: int = Field(..., ge=1, description="Largest alternative-set size")
    domain: DomainKind | None = Field(default=None, description="Requested domain")
    k: int | None = Field(default=None, ge=2, description="Largest rule-set size")
    seed_start: int = Field(default=0, description="First seed")
    seed_count: int = Field(..., ge=0, description="Number of seeds")
    jobs: int = Field(default=1, ge=1, description="Worker count")
    universal: bool = Field(default=False, description="Universal check")
    vacuous_pass: bool = Field(default=False, description="Vacuous pass")
    full_group: bool = Field(default=False, description="Full symmetry groups")
    include_same_outcome: bool = Field(
        default=True, description="Include agreeing rivals"
    )
    output: Path | None = Field(default=None, description="Output file")
    save: bool = Field(default=False, description="Save campaign report")
    output_format: OutputFormat = Field(
        default=OutputFormat.TEXT, description="Output format"
    )
    log_level: str = Field(default="WARNING", description="Logging level")

    model_config = {
        "json_schema_extra": {
            "example": {
                "subcommand": "selfselect",
                "rule": "borda:4",
                "n": 5,
                "tau_max": 4,
                "seed_count": 100,
                "output_format": "json",
            }
        }
    }

    @model_validator(mode="after")
    def _check_universe(self) -> "Invocation":
        if self.tau_min > self.tau_max:
            raise ValueError(
                f"--tau-min ({self.tau_min}) exceeds --tau-max ({self.tau_max})"
            )
        if self.k is not None and self.k > self.tau_max:
            raise ValueError(f"-k ({self.k}) exceeds --tau-max ({self.tau_max})")
        return self

    @property
    def seeds(self) -> list[int]:
        """Seeds of the sampled rules."""
        return list(range(self.seed_start, self.seed_start + self.seed_count))

    def resolved_k(self, default_k: int) -> int:
        """The requested ``k``, else the configured default capped at ``tau_max``."""
        if self.k is not None:
            return self.k
        return max(2, min(default_k, self.tau_max))

    def universe(self, default_domain: DomainKind) -> Universe:
        """
        The universe to check on.

        Args:
            default_domain: Domain used when none was requested.
        """
        return Universe(
            n=self.n,
            tau_min=self.tau_min,
            tau_max=self.tau_max,
            domain_kind=self.domain or default_domain,
        )


def _universe_options() -> argparse.ArgumentParser:
    options = argparse.ArgumentParser(add_help=False)
    universe = options.add_argument_group("universe")
    universe.add_argument("-n", type=int, help="number of voters")
    universe.add_argument(
        "--tau-min", type=int, default=1, help="smallest alternative-set size"
    )
    universe.add_argument("--tau-max", type=int, help="largest alternative-set size")
    universe.add_argument(
        "--domain",
        choices=[kind.value for kind in DomainKind],
        help="admissible profile domain",
    )

    checks = options.add_argument_group("checks")
    checks.add_argument("-k", type=int, help="largest rule-set size")
    checks.add_argument(
        "--vacuous-pass",
        action="store_true",
        default=None,
        help="count an empty compatible set as self-selection",
    )
    checks.add_argument(
        "--full-group",
        action="store_true",
        default=None,
        help="check anonymity and neutrality over the full groups",
    )
    checks.add_argument(
        "--exclude-same-outcome",
        action="store_true",
        help="skip rivals that agree with the rule",
    )

    output = options.add_argument_group("output")
    output.add_argument(
        "--format",
        dest="output_format",
        choices=[fmt.value for fmt in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="output format",
    )
    output.add_argument("-o", "--output", type=Path, help="write output to a file")
    output.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log progress to stderr (-vv for debug)",
    )
    return options


def build_parser() -> argparse.ArgumentParser:
    """
    Build the ``selfselect`` argument parser.

    Returns:
        Parser with the ``eval``, ``axioms``, ``selfselect``, ``verify`` and
        ``export-table`` subcommands.
    """
    parser = argparse.ArgumentParser(
        prog="selfselect",
        description="Verify self-selectivity of voting rules on finite universes.",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    options = _universe_options()

    eval_parser = subparsers.add_parser(
        Subcommand.EVAL.value,
        parents=[options],
        help="evaluate a rule on a profile file",
    )
    eval_parser.add_argument("profile", type=Path, help="profile file")
    eval_parser.add_argument("rule", help="rule spec, e.g. borda:4")

    axioms_parser = subparsers.add_parser(
        Subcommand.AXIOMS.value,
        parents=[options],
        help="check axioms on a universe",
    )
    axioms_parser.add_argument("rule", help="rule spec")
    axioms_parser.add_argument(
        "--axiom",
        action="append",
        choices=[axiom.value for axiom in Axiom],
        help="axiom to check (repeatable; default: all applicable)",
    )

    ss_parser = subparsers.add_parser(
        Subcommand.SELFSELECT.value,
        parents=[options],
        help="check binary or universal self-selectivity",
    )
    ss_parser.add_argument("rule", help="rule spec")
    ss_parser.add_argument(
        "--universal",
        action="store_true",
        help="quantify over rule sets of up to k rules",
    )

    verify_parser = subparsers.add_parser(
        Subcommand.VERIFY.value,
        parents=[options],
        help="run a verification campaign",
    )
    verify_parser.add_argument(
        "campaign", choices=[campaign.value for campaign in Campaign]
    )
    verify_parser.add_argument("--seeds", type=int, help="number of sampled rules")
    verify_parser.add_argument(
        "--seed-start", type=int, default=0, help="first sampled seed"
    )
    verify_parser.add_argument("--jobs", type=int, help="worker count")
    verify_parser.add_argument(
        "--save",
        action="store_true",
        help="also write the JSON report to the report directory",
    )

    export_parser = subparsers.add_parser(
        Subcommand.EXPORT_TABLE.value,
        parents=[options],
        help="write the orbit table of a neutral rule",
    )
    export_parser.add_argument("rule", help="rule spec")

    return parser


def _log_level(verbose: int, configured: str) -> str:
    if verbose >= 2:
        return "DEBUG"
    if verbose == 1:
        return "INFO"
    return configured


def parse_invocation(argv: Sequence[str] | None, settings: Settings) -> Invocation:
    """
    Parse a command line into an Invocation.

    Args:
        argv: Arguments without the program name.
        settings: Defaults for unset flags.

    Returns:
        The validated invocation.

    Raises:
        SystemExit: On argparse usage errors (status 2) and ``--help``.
        pydantic.ValidationError: If universe parameters are invalid.
    """
    args = build_parser().parse_args(argv)
    subcommand = Subcommand(args.subcommand)

    def flag(name: str, default: Any) -> Any:
        value = getattr(args, name, None)
        return default if value is None else value

    return Invocation(
        subcommand=subcommand,
        rule=getattr(args, "rule", None),
        profile_path=getattr(args, "profile", None),
        campaign=getattr(args, "campaign", None),
        axioms=getattr(args, "axiom", None) or [],
        n=flag("n", settings.default_n),
        tau_min=args.tau_min,
        tau_max=flag("tau_max", settings.default_tau_max),
        domain=args.domain,
        k=args.k,
        seed_start=flag("seed_start", 0),
        seed_count=flag("seeds", settings.default_seed_count),
        jobs=flag("jobs", settings.jobs),
        universal=getattr(args, "universal", False),
        vacuous_pass=flag("vacuous_pass", settings.vacuous_pass),
        full_group=flag("full_group", settings.full_group),
        include_same_outcome=(
            settings.include_same_outcome and not args.exclude_same_outcome
        ),
        output=args.output,
        save=getattr(args, "save", False),
        output_format=OutputFormat(args.output_format),
        log_level=_log_level(args.verbose, settings.log_level),
    )

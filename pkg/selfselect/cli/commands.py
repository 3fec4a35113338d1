"""
Selfselect Verifier - CLI Commands.

This module implements the ``selfselect`` subcommands and maps the
verifier's exceptions to the stable exit codes scripts rely on:

- 0: success, or the checked property holds
- 1: a verdict or campaign assertion fails
- 2: usage, parse or precondition error
- 3: a rule was evaluated outside its domain
"""

import logging
import sys
from collections.abc import Awaitable, Callable, Sequence
from enum import IntEnum
from functools import partial

from pydantic import ValidationError

from selfselect.cli.output import (
    read_text,
    render_report,
    render_ss_verdict,
    render_verdict,
    to_json,
    verdicts_to_json,
    write_output,
)
from selfselect.cli.parser import (
    Invocation,
    OutputFormat,
    Subcommand,
    parse_invocation,
)
from selfselect.core.axioms import (
    Axiom,
    PreconditionError,
    axiom_profile,
    check_anonymity,
    check_neutrality,
)
from selfselect.core.config import Settings, get_settings
from selfselect.core.profile_format import format_profile, parse_profile
from selfselect.core.profiles import ProfileError
from selfselect.core.rules import (
    RuleConstraintError,
    RuleDomainError,
    RuleSpecError,
    dump_table,
    evaluate_label,
    parse_rule_spec,
    table_from_rule,
)
from selfselect.core.self_selectivity import check_binary_ss, check_universal_ss
from selfselect.core.task_dispatcher import CampaignTaskError
from selfselect.core.theorems import AXIOM_CHECKS, ExampleMismatchError, run_campaign
from selfselect.models.reports import EvalResult
from selfselect.models.universe import DomainKind, Universe
from selfselect.models.verdicts import Verdict

logger = logging.getLogger("cli")


class ExitCode(IntEnum):
    """Process exit codes."""

    OK = 0
    FAILED = 1
    USAGE = 2
    DOMAIN = 3


Command = Callable[[Invocation, Settings], Awaitable[ExitCode]]


def _verdict_code(holds: bool) -> ExitCode:
    return ExitCode.OK if holds else ExitCode.FAILED


async def cmd_eval(invocation: Invocation, settings: Settings) -> ExitCode:
    """
    Evaluate a rule on a profile file and print the chosen label.

    The rule is built on the universe of the profile's voter count and
    alternative-set size.
    """
    if invocation.profile_path is None or invocation.rule is None:
        raise RuleSpecError("eval needs a profile file and a rule spec")
    profile = parse_profile(await read_text(invocation.profile_path))
    universe = Universe(
        n=profile.n,
        tau_max=profile.tau,
        domain_kind=invocation.domain or settings.default_domain,
    )
    rule = parse_rule_spec(invocation.rule, universe)
    chosen = evaluate_label(rule, profile)
    logger.info(f"{rule.name} chooses {chosen} at [{profile}]")

    if invocation.output_format == OutputFormat.JSON:
        result = EvalResult(
            rule=rule.name, profile_text=format_profile(profile), chosen=chosen
        )
        await write_output(to_json(result), invocation.output)
    else:
        await write_output(chosen, invocation.output)
    return ExitCode.OK


def _axiom_checker(axiom: Axiom, full_group: bool) -> Callable[..., Verdict]:
    if axiom == Axiom.ANONYMITY:
        return partial(check_anonymity, full_group=full_group)
    if axiom == Axiom.NEUTRALITY:
        return partial(check_neutrality, full_group=full_group)
    return AXIOM_CHECKS[axiom.value]


async def cmd_axioms(invocation: Invocation, settings: Settings) -> ExitCode:
    """
    Check axioms of a rule on a universe.

    Without ``--axiom`` every axiom applicable to the universe is checked.
    Exits 0 iff all checked axioms hold.
    """
    universe = invocation.universe(settings.default_domain)
    rule = parse_rule_spec(invocation.rule or "", universe)
    if invocation.axioms:
        verdicts = [
            _axiom_checker(axiom, invocation.full_group)(rule, universe)
            for axiom in invocation.axioms
        ]
    else:
        verdicts = list(axiom_profile(rule, universe, invocation.full_group).values())

    if invocation.output_format == OutputFormat.JSON:
        text = verdicts_to_json(verdicts)
    else:
        header = f"axioms of {rule.name} on {universe.describe()}"
        text = "\n".join([header, *(render_verdict(v) for v in verdicts)])
    await write_output(text, invocation.output)
    return _verdict_code(all(verdict.holds for verdict in verdicts))


async def cmd_selfselect(invocation: Invocation, settings: Settings) -> ExitCode:
    """
    Check binary, or with ``--universal`` universal, self-selectivity.

    Exits 0 iff the rule is self-selective on the universe.
    """
    universe = invocation.universe(settings.default_domain)
    rule = parse_rule_spec(invocation.rule or "", universe)
    if invocation.universal:
        verdict = check_universal_ss(
            rule,
            universe,
            invocation.resolved_k(settings.default_k),
            include_same_outcome=invocation.include_same_outcome,
            vacuous_pass=invocation.vacuous_pass,
        )
    else:
        verdict = check_binary_ss(
            rule,
            universe,
            include_same_outcome=invocation.include_same_outcome,
            vacuous_pass=invocation.vacuous_pass,
        )

    if invocation.output_format == OutputFormat.JSON:
        text = to_json(verdict)
    else:
        text = render_ss_verdict(verdict)
    await write_output(text, invocation.output)
    return _verdict_code(verdict.holds)


async def cmd_verify(invocation: Invocation, settings: Settings) -> ExitCode:
    """
    Run a verification campaign.

    When no domain is requested, campaigns tied to the Condorcet domain run
    on it and the others use the configured default. Exits 0 iff every
    assertion of the report passed.
    """
    campaign = invocation.campaign
    if campaign is None:
        raise PreconditionError("verify needs a campaign")
    domain: DomainKind = campaign.natural_domain or settings.default_domain
    universe = invocation.universe(domain)
    report = await run_campaign(
        campaign,
        universe,
        invocation.seeds,
        invocation.resolved_k(settings.default_k),
        jobs=invocation.jobs,
        vacuous_pass=invocation.vacuous_pass,
    )

    report_json = to_json(report)
    if invocation.output_format == OutputFormat.JSON:
        await write_output(report_json, invocation.output)
    else:
        await write_output(render_report(report), invocation.output)
    if invocation.save:
        await write_output(report_json, settings.report_path(campaign.value))
    return _verdict_code(report.passed)


async def cmd_export_table(invocation: Invocation, settings: Settings) -> ExitCode:
    """Write the orbit table of a neutral rule on the universe."""
    universe = invocation.universe(settings.default_domain)
    rule = parse_rule_spec(invocation.rule or "", universe)
    table = table_from_rule(rule, universe)
    logger.info(f"Exporting {len(table)} orbits of {rule.name}")
    await write_output(dump_table(table, rule.name).rstrip("\n"), invocation.output)
    return ExitCode.OK


COMMANDS: dict[Subcommand, Command] = {
    Subcommand.EVAL: cmd_eval,
    Subcommand.AXIOMS: cmd_axioms,
    Subcommand.SELFSELECT: cmd_selfselect,
    Subcommand.VERIFY: cmd_verify,
    Subcommand.EXPORT_TABLE: cmd_export_table,
}


def exit_code_for(error: BaseException) -> ExitCode | None:
    """
    Exit code of a verifier exception.

    Returns:
        The exit code, or None for errors that are bugs.
    """
    if isinstance(error, CampaignTaskError):
        cause = error.__cause__
        return exit_code_for(cause) if cause is not None else None
    if isinstance(error, RuleDomainError):
        return ExitCode.DOMAIN
    if isinstance(error, ExampleMismatchError):
        return ExitCode.FAILED
    if isinstance(
        error,
        (
            ProfileError,
            RuleSpecError,
            RuleConstraintError,
            PreconditionError,
            ValidationError,
            OSError,
        ),
    ):
        return ExitCode.USAGE
    return None


def _error_message(error: BaseException) -> str:
    if isinstance(error, ValidationError):
        return "; ".join(str(detail["msg"]) for detail in error.errors())
    if isinstance(error, CampaignTaskError) and error.__cause__ is not None:
        return f"task {error.task_id}: {error.__cause__}"
    return str(error)


def _report_error(error: BaseException) -> None:
    sys.stderr.write(f"selfselect: error: {_error_message(error)}\n")


async def run_cli(
    argv: Sequence[str] | None = None,
    configure: Callable[[str], None] | None = None,
) -> int:
    """
    Parse a command line and run its subcommand.

    Args:
        argv: Arguments without the program name; ``sys.argv[1:]`` if None.
        configure: Called with the resolved log level before the command runs.

    Returns:
        The exit code.
    """
    settings = get_settings()
    try:
        invocation = parse_invocation(argv, settings)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else int(ExitCode.USAGE)
    except ValidationError as e:
        _report_error(e)
        return int(ExitCode.USAGE)

    if configure is not None:
        configure(invocation.log_level)
    logger.debug(f"Running {invocation.subcommand.value}")

    try:
        code = await COMMANDS[invocation.subcommand](invocation, settings)
    except Exception as e:
        mapped = exit_code_for(e)
        if mapped is None:
            raise
        logger.debug(f"{type(e).__name__}: {e}")
        _report_error(e)
        return int(mapped)
    return int(code)

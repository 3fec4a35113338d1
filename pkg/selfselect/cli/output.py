"""
Selfselect Verifier - Output Rendering.

This module renders verdicts and campaign reports as text or JSON and
writes command output to stdout or to a file. Witness profiles are always
rendered in the profile text format so they can be fed back to ``eval``.
"""

import logging
import sys
from pathlib import Path

import aiofiles
from pydantic import BaseModel, TypeAdapter

from selfselect.models.reports import CampaignReport
from selfselect.models.verdicts import SSVerdict, SSWitness, Verdict, Witness

logger = logging.getLogger("cli")

INDENT = "    "

_verdict_list = TypeAdapter(list[Verdict])


def _indent(text: str, depth: int = 1) -> str:
    prefix = INDENT * depth
    return "\n".join(prefix + line for line in text.rstrip("\n").splitlines())


def _status(holds: bool) -> str:
    return "holds" if holds else "fails"


def render_witness(witness: Witness) -> str:
    """Render an axiom counterexample."""
    lines = [
        f"witness ({witness.kind}): {witness.detail}",
        _indent(witness.profile_text),
    ]
    if witness.related_profile_text is not None:
        lines.append("compared with:")
        lines.append(_indent(witness.related_profile_text))
    if witness.voter_permutation is not None:
        lines.append(f"voter permutation: {witness.voter_permutation}")
    if witness.relabeling is not None:
        pairs = ", ".join(f"{a}->{b}" for a, b in witness.relabeling.items())
        lines.append(f"relabeling: {pairs}")
    if witness.removed is not None:
        lines.append(f"removed: {' '.join(witness.removed)}")
    for expression, value in witness.outputs.items():
        lines.append(f"{expression} = {value}")
    return "\n".join(lines)


def render_ss_witness(witness: SSWitness) -> str:
    """
    Render a self-selectivity counterexample.

    Lists the base profile, the rule's choice, the slot outcomes, every
    voter's induced weak order and every compatible profile with the slot
    the rule elects there.
    """
    lines = [
        f"witness ({witness.kind.value}):",
        _indent(witness.profile_text),
        f"rule chooses: {witness.rule_choice}",
        witness.slots,
        "induced preferences:",
    ]
    lines.extend(
        f"{INDENT}voter {voter}: {order}"
        for voter, order in enumerate(witness.induced, start=1)
    )
    if not witness.compatible:
        lines.append("no admissible compatible profile")
    for choice in witness.compatible:
        lines.append(f"compatible profile, rule elects {choice.chosen}:")
        lines.append(_indent(choice.profile_text))
    return "\n".join(lines)


def render_verdict(verdict: Verdict) -> str:
    """One line per verdict, followed by the witness when it fails."""
    line = (
        f"{verdict.axiom}: {_status(verdict.holds)} "
        f"({verdict.profiles_checked} profiles checked)"
    )
    if verdict.witness is None:
        return line
    return line + "\n" + _indent(render_witness(verdict.witness))


def render_ss_verdict(verdict: SSVerdict) -> str:
    """Render a self-selectivity verdict with its witness dump."""
    scope = f", k={verdict.k}" if verdict.k is not None else ""
    lines = [
        f"{verdict.axiom} of {verdict.rule}: {_status(verdict.holds)}",
        f"universe: {verdict.universe.describe()}{scope}",
        f"cases checked: {verdict.cases_checked}",
    ]
    if verdict.witness is not None:
        lines.append(render_ss_witness(verdict.witness))
    return "\n".join(lines)


def _table(header: list[str], rows: list[list[str]]) -> list[str]:
    widths = [len(cell) for cell in header]
    for row in rows:
        widths = [max(width, len(cell)) for width, cell in zip(widths, row)]
    return [
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        for row in [header, *rows]
    ]


def render_report(report: CampaignReport) -> str:
    """
    Render a campaign report as aligned text tables.

    Sections: the group summary, the per-rule results, then the failed
    assertions with their witnesses.
    """
    lines = [f"campaign: {report.campaign}"]
    lines.extend(f"universe: {universe.describe()}" for universe in report.universes)
    if report.seeds:
        lines.append(
            f"seeds: {report.seeds[0]}..{report.seeds[-1]} ({len(report.seeds)})"
        )
    lines.append("")
    lines.extend(
        _table(
            ["group", "result"],
            [[group, "pass" if ok else "FAIL"] for group, ok in report.summary.items()],
        )
    )

    if report.rules:
        axioms = sorted({name for rule in report.rules for name in rule.axioms})
        header = ["rule", *axioms, "binary-ss", "universal-ss"]
        rows = []
        for rule in report.rules:
            row = [rule.rule]
            row.extend(_cell(rule.axioms.get(name)) for name in axioms)
            row.append(_cell(rule.binary_ss.holds if rule.binary_ss else None))
            row.append(_cell(rule.universal_ss.holds if rule.universal_ss else None))
            rows.append(row)
        lines.append("")
        lines.extend(_table(header, rows))

    for assertion in report.failures:
        lines.append("")
        subject = f" [{assertion.rule}]" if assertion.rule else ""
        lines.append(f"FAILED {assertion.group}: {assertion.name}{subject}")
        if assertion.detail:
            lines.append(_indent(assertion.detail))
        if isinstance(assertion.witness, SSWitness):
            lines.append(_indent(render_ss_witness(assertion.witness)))
        elif isinstance(assertion.witness, Witness):
            lines.append(_indent(render_witness(assertion.witness)))

    lines.append("")
    verdict = "passed" if report.passed else f"{len(report.failures)} failed"
    lines.append(
        f"{len(report.assertions)} assertions, {verdict} "
        f"({report.elapsed_seconds:.2f}s)"
    )
    return "\n".join(lines)


def _cell(value: bool | None) -> str:
    if value is None:
        return "-"
    return "yes" if value else "no"


def to_json(model: BaseModel) -> str:
    """Serialize a model as indented JSON."""
    return model.model_dump_json(indent=2)


def verdicts_to_json(verdicts: list[Verdict]) -> str:
    """Serialize a list of axiom verdicts as an indented JSON array."""
    return _verdict_list.dump_json(verdicts, indent=2).decode("utf-8")


async def write_output(text: str, path: Path | None = None) -> None:
    """
    Write command output.

    Args:
        text: Output without a trailing newline.
        path: Target file; stdout when None. Parent directories are created.
    """
    if path is None:
        sys.stdout.write(text + "\n")
        sys.stdout.flush()
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    async with aiofiles.open(path, "w", encoding="utf-8") as f:
        await f.write(text + "\n")
    logger.info(f"Wrote {path}")


async def read_text(path: Path) -> str:
    """Read a UTF-8 input file."""
    async with aiofiles.open(path, encoding="utf-8") as f:
        return await f.read()

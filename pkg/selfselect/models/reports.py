"""
Selfselect Verifier - Campaign Report Models.

This module defines the Pydantic models produced by the verification
campaigns: per-rule results, individual assertions and the report that
aggregates them.
"""

from datetime import datetime, timezone

from pydantic import BaseModel, Field

from selfselect.models.universe import Universe
from selfselect.models.verdicts import SSVerdict, SSWitness, Witness


class RuleResult(BaseModel):
    """
    Everything a campaign computed about one rule.

    Attributes:
        rule: Rule name.
        axioms: Axiom name to whether it holds.
        binary_ss: Binary self-selectivity verdict, if computed.
        universal_ss: Universal self-selectivity verdict, if computed.
        k: Largest rule-set size of the universal check.
    """

    rule: str = Field(..., description="Rule name")
    axioms: dict[str, bool] = Field(default_factory=dict, description="Axiom profile")
    binary_ss: SSVerdict | None = Field(default=None, description="Binary verdict")
    universal_ss: SSVerdict | None = Field(
        default=None, description="Universal verdict"
    )
    k: int | None = Field(default=None, description="Largest rule-set size")


class AssertionResult(BaseModel):
    """
    One asserted statement of a campaign.

    Attributes:
        group: Summary group the assertion belongs to.
        name: What was asserted.
        rule: Rule the assertion is about, if any.
        passed: Whether the assertion held.
        detail: Human-readable detail.
        witness: Supporting witness: the counterexample for a failed
            assertion, or the failure an assertion expected.
    """

    group: str = Field(..., description="Summary group")
    name: str = Field(..., description="Asserted statement")
    rule: str | None = Field(default=None, description="Rule concerned")
    passed: bool = Field(..., description="Whether the assertion held")
    detail: str = Field(default="", description="Detail")
    witness: SSWitness | Witness | None = Field(default=None, description="Witness")


class CampaignReport(BaseModel):
    """
    Report of one verification campaign.

    Attributes:
        campaign: Campaign name.
        universes: Universes the campaign quantified over.
        rules: Per-rule results.
        assertions: Every assertion in evaluation order.
        summary: Per group, whether all of its assertions passed.
        seeds: Seeds of the sampled rules.
        elapsed_seconds: Wall-clock duration.
        timestamp: When the report was created.

    Example:
        >>> report = CampaignReport.build("example1", [], [], [], [], 0.1)
        >>> report.passed
        True
    """

    campaign: str = Field(..., description="Campaign name")
    universes: list[Universe] = Field(default_factory=list, description="Universes")
    rules: list[RuleResult] = Field(default_factory=list, description="Rule results")
    assertions: list[AssertionResult] = Field(
        default_factory=list, description="Assertions"
    )
    summary: dict[str, bool] = Field(default_factory=dict, description="Group verdicts")
    seeds: list[int] = Field(default_factory=list, description="Sampled seeds")
    elapsed_seconds: float = Field(default=0.0, ge=0, description="Duration")
    timestamp: datetime = Field(
        default_factory=lambda: datetime.now(timezone.utc),
        description="Creation time",
    )

    @classmethod
    def build(
        cls,
        campaign: str,
        universes: list[Universe],
        rules: list[RuleResult],
        assertions: list[AssertionResult],
        seeds: list[int],
        elapsed_seconds: float,
    ) -> "CampaignReport":
        """Create a report, deriving the summary from the assertions."""
        return cls(
            campaign=campaign,
            universes=universes,
            rules=rules,
            assertions=assertions,
            summary=summarize(assertions),
            seeds=seeds,
            elapsed_seconds=elapsed_seconds,
        )

    @property
    def passed(self) -> bool:
        """Whether every assertion passed."""
        return all(assertion.passed for assertion in self.assertions)

    @property
    def failures(self) -> list[AssertionResult]:
        """Assertions that did not pass."""
        return [assertion for assertion in self.assertions if not assertion.passed]


def summarize(assertions: list[AssertionResult]) -> dict[str, bool]:
    """Per group, whether all of its assertions passed (groups in first-seen order)."""
    summary: dict[str, bool] = {}
    for assertion in assertions:
        passed = summary.get(assertion.group, True) and assertion.passed
        summary[assertion.group] = passed
    return summary


class EvalResult(BaseModel):
    """
    A rule evaluated at one profile.

    Attributes:
        rule: Rule name.
        profile_text: The profile, text format.
        chosen: Label of the chosen alternative.
    """

    rule: str = Field(..., description="Rule name")
    profile_text: str = Field(..., description="Profile, text format")
    chosen: str = Field(..., description="Chosen alternative")

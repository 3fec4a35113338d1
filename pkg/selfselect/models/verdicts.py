"""
Selfselect Verifier - Verdict Models.

This module defines the Pydantic models returned by the axiom and
self-selectivity checkers. Every failing verdict carries a witness whose
profiles are rendered in the profile text format, so a failure can be
replayed with the ``eval`` command.
"""

from enum import Enum

from pydantic import BaseModel, Field, model_validator

from selfselect.models.universe import Universe


class Witness(BaseModel):
    """
    Counterexample to an axiom.

    Attributes:
        kind: Name of the violated axiom.
        profile_text: The violating profile in the profile text format.
        related_profile_text: The permuted, relabeled or restricted profile
            the rule was compared against, if any.
        voter_permutation: 1-based voter permutation, for anonymity.
        relabeling: Alternative relabeling, for neutrality.
        removed: Alternatives removed, for IIA and pairwise consistency.
        outputs: Rule outputs that disagree, keyed by expression.
        detail: One-line human explanation.
    """

    kind: str = Field(..., description="Violated axiom")
    profile_text: str = Field(..., description="Violating profile, text format")
    related_profile_text: str | None = Field(
        default=None, description="Compared profile, text format"
    )
    voter_permutation: list[int] | None = Field(
        default=None, description="1-based voter permutation"
    )
    relabeling: dict[str, str] | None = Field(
        default=None, description="Alternative relabeling"
    )
    removed: list[str] | None = Field(default=None, description="Removed alternatives")
    outputs: dict[str, str] = Field(
        default_factory=dict, description="Disagreeing rule outputs"
    )
    detail: str = Field(default="", description="Human-readable explanation")

    model_config = {
        "json_schema_extra": {
            "example": {
                "kind": "iia",
                "profile_text": "alternatives: x y z w\nvoter: x > y > z > w\n...",
                "removed": ["z", "w"],
                "outputs": {"sigma(P)": "y", "sigma(P|{x,y})": "x"},
                "detail": "removing losing alternatives changes the winner",
            }
        }
    }


class Verdict(BaseModel):
    """
    Result of an exhaustive axiom check.

    Attributes:
        axiom: Checked axiom.
        rule: Name of the checked rule.
        universe: Universe the check quantified over.
        holds: Whether the axiom holds on the universe.
        witness: First counterexample in enumeration order.
        profiles_checked: Profiles visited before the verdict was reached.
    """

    axiom: str = Field(..., description="Checked axiom")
    rule: str = Field(..., description="Checked rule")
    universe: Universe = Field(..., description="Universe checked")
    holds: bool = Field(..., description="Whether the axiom holds")
    witness: Witness | None = Field(default=None, description="Counterexample")
    profiles_checked: int = Field(default=0, ge=0, description="Profiles visited")

    @model_validator(mode="after")
    def _witness_iff_failure(self) -> "Verdict":
        if self.holds == (self.witness is not None):
            raise ValueError("a verdict carries a witness exactly when it fails")
        return self


class SSWitnessKind(str, Enum):
    """Ways a rule can fail to select itself."""

    NO_SELF_SELECTION = "no-self-selection"
    EMPTY_COMPATIBLE_SET = "empty-compatible-set"


class CompatibleChoice(BaseModel):
    """
    One compatible profile over the rule slots and the slot elected there.

    Attributes:
        profile_text: The compatible profile over slot labels, text format.
        chosen: Slot elected by the rule under test.
    """

    profile_text: str = Field(..., description="Compatible profile over slots")
    chosen: str = Field(..., description="Elected slot")


class SSWitness(BaseModel):
    """
    Counterexample to binary or universal self-selectivity.

    Attributes:
        kind: Failure kind.
        profile_text: Base profile, text format.
        rule_choice: The rule's choice at the base profile.
        slots: Slot outcomes as ``slots: sigma-><label>, r1-><label>, ...``.
        induced: Per voter, the induced weak order over slots.
        compatible: Every admissible compatible profile with the elected slot.
    """

    kind: SSWitnessKind = Field(..., description="Failure kind")
    profile_text: str = Field(..., description="Base profile, text format")
    rule_choice: str = Field(..., description="Rule's choice at the base profile")
    slots: str = Field(..., description="Slot outcome vector")
    induced: list[str] = Field(
        default_factory=list, description="Induced weak order per voter"
    )
    compatible: list[CompatibleChoice] = Field(
        default_factory=list, description="Compatible profiles and elected slots"
    )

    @property
    def rival_outcomes(self) -> list[str]:
        """Outcome labels of slots ``r1, r2, ...``."""
        pairs = self.slots.removeprefix("slots:").split(",")
        return [pair.split("->")[1].strip() for pair in pairs[1:]]


class SSVerdict(BaseModel):
    """
    Result of a self-selectivity check.

    Attributes:
        axiom: ``binary-ss`` or ``universal-ss``.
        rule: Name of the checked rule.
        universe: Universe the check quantified over.
        k: Largest rule-set size, universal checks only.
        holds: Whether the rule is self-selective on the universe.
        witness: First failure in enumeration order.
        cases_checked: (profile, outcome vector) pairs visited.
    """

    axiom: str = Field(..., description="binary-ss or universal-ss")
    rule: str = Field(..., description="Checked rule")
    universe: Universe = Field(..., description="Universe checked")
    k: int | None = Field(default=None, description="Largest rule-set size")
    holds: bool = Field(..., description="Whether the rule self-selects")
    witness: SSWitness | None = Field(default=None, description="Counterexample")
    cases_checked: int = Field(default=0, ge=0, description="Cases visited")

    @model_validator(mode="after")
    def _witness_iff_failure(self) -> "SSVerdict":
        if self.holds == (self.witness is not None):
            raise ValueError("a verdict carries a witness exactly when it fails")
        return self

"""
Selfselect Verifier - Universe Models.

This module defines the finite test domain every checker quantifies over:
a fixed voter count, a bounded range of alternative-set sizes and the
kind of admissible profiles.
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class DomainKind(str, Enum):
    """Kinds of admissible profile domains."""

    UNRESTRICTED = "unrestricted"
    CONDORCET = "condorcet"


class Universe(BaseModel):
    """
    Truncated universe of voters and alternatives.

    Quantifiers over every alternative-set size are interpreted as ranging
    over `tau_min..tau_max` only. Every verdict is stamped with the universe
    it was computed on.

    Attributes:
        n: Number of voters.
        tau_min: Smallest alternative-set size enumerated.
        tau_max: Largest alternative-set size enumerated.
        domain_kind: Unrestricted strict profiles or profiles with a strong
            Condorcet winner.

    Example:
        >>> universe = Universe(n=3, tau_max=3)
        >>> list(universe.tau_range)
        [1, 2, 3]
    """

    n: int = Field(default=3, ge=2, description="Number of voters")
    tau_min: int = Field(default=1, ge=1, description="Smallest alternative-set size")
    tau_max: int = Field(default=3, ge=1, description="Largest alternative-set size")
    domain_kind: DomainKind = Field(
        default=DomainKind.UNRESTRICTED, description="Admissible profile domain"
    )

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "n": 3,
                "tau_min": 1,
                "tau_max": 3,
                "domain_kind": "unrestricted",
            }
        },
    )

    @model_validator(mode="after")
    def _check_range(self) -> "Universe":
        if self.tau_min > self.tau_max:
            raise ValueError(
                f"tau_min ({self.tau_min}) exceeds tau_max ({self.tau_max})"
            )
        return self

    @property
    def tau_range(self) -> range:
        """Inclusive range of alternative-set sizes."""
        return range(self.tau_min, self.tau_max + 1)

    def with_domain(self, domain_kind: DomainKind) -> "Universe":
        """Return the same universe over another domain kind."""
        return self.model_copy(update={"domain_kind": domain_kind})

    def describe(self) -> str:
        """Short human-readable description used in logs and text reports."""
        return (
            f"n={self.n}, tau={self.tau_min}..{self.tau_max}, "
            f"domain={self.domain_kind.value}"
        )

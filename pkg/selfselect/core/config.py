"""
Selfselect Verifier - Configuration Management.

This module handles loading environment variables and managing the
verifier's default universe and campaign settings.
"""

from functools import lru_cache
from pathlib import Path

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings

from selfselect.models.universe import DomainKind, Universe

# Load environment variables from .env file
load_dotenv()


class Settings(BaseSettings):
    """
    Verifier settings loaded from ``SELFSELECT_*`` environment variables.

    Command-line flags override every field.

    Attributes:
        default_n: Voter count of the default universe.
        default_tau_max: Largest alternative-set size of the default universe.
        default_domain: Domain kind of the default universe.
        default_k: Largest rule-set size for universal checks.
        default_seed_count: Number of sampled rules per campaign sweep.
        jobs: Worker count for campaigns.
        vacuous_pass: Count an empty compatible set as self-selection.
        full_group: Check anonymity and neutrality over the full groups.
        include_same_outcome: Include rivals agreeing with the rule.
        log_level: Logging level.
        report_dir: Directory for saved reports.

    Example:
        >>> settings = get_settings()
        >>> settings.default_universe().n
        3
    """

    # Universe
    default_n: int = Field(default=3, ge=2, description="Default voter count")
    default_tau_max: int = Field(
        default=3, ge=1, description="Default largest alternative-set size"
    )
    default_domain: DomainKind = Field(
        default=DomainKind.UNRESTRICTED, description="Default domain kind"
    )

    # Checks
    default_k: int = Field(default=3, ge=2, description="Default largest rule-set size")
    default_seed_count: int = Field(
        default=100, ge=0, description="Sampled rules per campaign sweep"
    )
    jobs: int = Field(default=1, ge=1, description="Campaign worker count")
    vacuous_pass: bool = Field(
        default=False, description="Empty compatible sets count as self-selection"
    )
    full_group: bool = Field(
        default=False, description="Check symmetry axioms over the full groups"
    )
    include_same_outcome: bool = Field(
        default=True, description="Include rivals agreeing with the rule"
    )

    # Output
    log_level: str = Field(default="WARNING", description="Logging level")
    report_dir: Path = Field(
        default=Path("./reports"), description="Directory for report files"
    )

    class Config:
        """Pydantic configuration."""

        env_prefix = "SELFSELECT_"
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = False
        extra = "ignore"

    def default_universe(self) -> Universe:
        """
        Build the default universe.

        Returns:
            Universe over ``1..default_tau_max`` with the default voter count.
        """
        return Universe(
            n=self.default_n,
            tau_max=self.default_tau_max,
            domain_kind=self.default_domain,
        )

    def default_seeds(self) -> list[int]:
        """Seeds ``0..default_seed_count-1``."""
        return list(range(self.default_seed_count))

    def report_path(self, name: str) -> Path:
        """
        Path of a saved report.

        Args:
            name: Report name, usually the campaign.

        Returns:
            `report_dir / "<name>.json"`.
        """
        return self.report_dir / f"{name}.json"


@lru_cache
def get_settings() -> Settings:
    """
    Get the settings singleton.

    Returns:
        Settings: The settings instance.
    """
    return Settings()


def reload_settings() -> Settings:
    """
    Reload settings from environment.

    Clears the cached settings and returns a fresh instance.
    Useful for testing or when environment changes.

    Returns:
        Settings: Fresh settings instance.
    """
    get_settings.cache_clear()
    return get_settings()

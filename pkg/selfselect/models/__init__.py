"""
Selfselect Verifier - Models Package.

This package contains Pydantic models for universes, checker verdicts
and campaign reports.
"""

from selfselect.models.reports import (
    AssertionResult,
    CampaignReport,
    EvalResult,
    RuleResult,
)
from selfselect.models.universe import DomainKind, Universe
from selfselect.models.verdicts import (
    CompatibleChoice,
    SSVerdict,
    SSWitness,
    SSWitnessKind,
    Verdict,
    Witness,
)

__all__ = [
    # universe.py
    "DomainKind",
    "Universe",
    # verdicts.py
    "Witness",
    "Verdict",
    "SSWitnessKind",
    "CompatibleChoice",
    "SSWitness",
    "SSVerdict",
    # reports.py
    "RuleResult",
    "AssertionResult",
    "CampaignReport",
    "EvalResult",
]

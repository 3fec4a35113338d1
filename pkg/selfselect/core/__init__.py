"""
Selfselect Verifier - Core Package.

This package contains the profile algebra, the voting rules, the axiom
and self-selectivity checkers, the verification campaigns and the
infrastructure they run on.
"""

from selfselect.core.axioms import (
    Axiom,
    PreconditionError,
    axiom_profile,
    check_dictatorship,
)
from selfselect.core.config import Settings, get_settings, reload_settings
from selfselect.core.profile_format import (
    ProfileParseError,
    format_profile,
    parse_profile,
    read_profile,
)
from selfselect.core.profiles import (
    AlternativeSet,
    ProfileError,
    StrictProfile,
    WeakProfile,
    make_profile,
)
from selfselect.core.rules import (
    OrbitTable,
    RuleConstraintError,
    RuleDomainError,
    RuleSpecError,
    VotingRule,
    catalog,
    parse_rule_spec,
)
from selfselect.core.self_selectivity import (
    RuleSlotSet,
    check_binary_ss,
    check_universal_ss,
)
from selfselect.core.task_dispatcher import (
    CampaignTaskError,
    DispatchedTask,
    DispatchedTaskState,
    TaskDispatcher,
)
from selfselect.core.theorems import Campaign, ExampleMismatchError, run_campaign

__all__ = [
    # Configuration
    "Settings",
    "get_settings",
    "reload_settings",
    # Profiles
    "AlternativeSet",
    "StrictProfile",
    "WeakProfile",
    "ProfileError",
    "ProfileParseError",
    "make_profile",
    "parse_profile",
    "format_profile",
    "read_profile",
    # Rules
    "VotingRule",
    "OrbitTable",
    "RuleDomainError",
    "RuleSpecError",
    "RuleConstraintError",
    "catalog",
    "parse_rule_spec",
    # Checkers
    "Axiom",
    "PreconditionError",
    "axiom_profile",
    "check_dictatorship",
    "RuleSlotSet",
    "check_binary_ss",
    "check_universal_ss",
    # Campaigns
    "Campaign",
    "ExampleMismatchError",
    "run_campaign",
    # Execution
    "TaskDispatcher",
    "DispatchedTask",
    "DispatchedTaskState",
    "CampaignTaskError",
]

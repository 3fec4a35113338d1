"""
Selfselect Verifier - Axiom Checkers.

This module implements witness-producing checkers for unanimity,
dictatorship, anonymity, neutrality, independence of irrelevant
alternatives, the Pareto condition, two-alternative majority (Σ₂) and
pairwise consistency.

Each axiom has a per-profile entry point returning a Witness or None and
an exhaustive checker sweeping a Universe in enumeration order; the first
witness found is reported.
"""

import itertools
import logging
from collections.abc import Callable, Iterable
from enum import Enum

from selfselect.core.profile_format import format_profile
from selfselect.core.profiles import (
    Permutation,
    StrictProfile,
    adjacent_transpositions,
    common_top,
    enumerate_profiles,
    enumerate_universe,
    is_admissible,
    linear_orders,
    permute_voters,
    relabel,
    restrict_indices,
)
from selfselect.core.rules import VotingRule
from selfselect.models.universe import Universe
from selfselect.models.verdicts import Verdict, Witness

logger = logging.getLogger("axioms")

ViolationFinder = Callable[[VotingRule, StrictProfile], Witness | None]


class PreconditionError(ValueError):
    """Exception raised when a checker or campaign precondition is violated."""


class Axiom(str, Enum):
    """Axioms with an exhaustive checker."""

    UNANIMITY = "unanimity"
    ANONYMITY = "anonymity"
    NEUTRALITY = "neutrality"
    IIA = "iia"
    PARETO = "pareto"
    SIGMA2 = "sigma2"
    PAIRWISE_CONSISTENCY = "pairwise-consistency"


def _label(profile: StrictProfile, index: int) -> str:
    return profile.alt_set.label(index)


def _subset_label(profile: StrictProfile) -> str:
    return "{" + ",".join(profile.alt_set.labels) + "}"


def _voter_group(n: int, full_group: bool) -> list[Permutation]:
    if full_group:
        return list(itertools.permutations(range(n)))[1:]
    return adjacent_transpositions(n)


def _alternative_group(tau: int, full_group: bool) -> list[Permutation]:
    if full_group:
        return list(linear_orders(tau))[1:]
    return adjacent_transpositions(tau)


def unanimity_violation_at(rule: VotingRule, profile: StrictProfile) -> Witness | None:
    """Witness if the profile has a common top the rule does not select."""
    top = common_top(profile)
    if top is None:
        return None
    choice = rule.choose(profile)
    if choice == top:
        return None
    return Witness(
        kind=Axiom.UNANIMITY.value,
        profile_text=format_profile(profile),
        outputs={
            "sigma(P)": _label(profile, choice),
            "common top": _label(profile, top),
        },
        detail="the unanimously top-ranked alternative is not selected",
    )


def anonymity_violation_at(
    rule: VotingRule,
    profile: StrictProfile,
    full_group: bool = False,
) -> Witness | None:
    """
    Witness if permuting voters changes the rule's choice.

    Args:
        rule: Rule under test.
        profile: Admissible profile.
        full_group: Try every voter permutation instead of adjacent swaps.
    """
    choice = rule.choose(profile)
    for pi in _voter_group(profile.n, full_group):
        permuted = permute_voters(profile, pi)
        other = rule.choose(permuted)
        if other != choice:
            return Witness(
                kind=Axiom.ANONYMITY.value,
                profile_text=format_profile(profile),
                related_profile_text=format_profile(permuted),
                voter_permutation=[j + 1 for j in pi],
                outputs={
                    "sigma(P)": _label(profile, choice),
                    "sigma(piP)": _label(profile, other),
                },
                detail="permuting voters changes the selected alternative",
            )
    return None


def neutrality_violation_at(
    rule: VotingRule,
    profile: StrictProfile,
    full_group: bool = False,
) -> Witness | None:
    """
    Witness if relabeling alternatives does not relabel the rule's choice.

    Args:
        rule: Rule under test.
        profile: Admissible profile.
        full_group: Try every relabeling instead of adjacent swaps.
    """
    choice = rule.choose(profile)
    for mu in _alternative_group(profile.tau, full_group):
        relabeled = relabel(profile, mu)
        other = rule.choose(relabeled)
        if other != mu[choice]:
            return Witness(
                kind=Axiom.NEUTRALITY.value,
                profile_text=format_profile(profile),
                related_profile_text=format_profile(relabeled),
                relabeling={
                    _label(profile, a): _label(profile, mu[a])
                    for a in range(profile.tau)
                    if mu[a] != a
                },
                outputs={
                    "mu(sigma(P))": _label(profile, mu[choice]),
                    "sigma(muP)": _label(profile, other),
                },
                detail="relabeling alternatives does not relabel the choice",
            )
    return None


def _restriction_witness(
    kind: Axiom,
    profile: StrictProfile,
    restricted: StrictProfile,
    removed: Iterable[int],
    choice: int,
    restricted_choice: int,
) -> Witness:
    return Witness(
        kind=kind.value,
        profile_text=format_profile(profile),
        related_profile_text=format_profile(restricted),
        removed=[_label(profile, a) for a in removed],
        outputs={
            "sigma(P)": _label(profile, choice),
            f"sigma(P|{_subset_label(restricted)})": _label(
                restricted, restricted_choice
            ),
        },
        detail="removing losing alternatives changes the winner",
    )


def iia_violation_at(rule: VotingRule, profile: StrictProfile) -> Witness | None:
    """
    Witness if removing some set of losing alternatives changes the winner.

    Removal sets are tried by size, then lexicographically. Restrictions
    outside the rule's domain are skipped.
    """
    choice = rule.choose(profile)
    losers = [a for a in range(profile.tau) if a != choice]
    for size in range(1, len(losers) + 1):
        for removed in itertools.combinations(losers, size):
            keep = [a for a in range(profile.tau) if a not in removed]
            restricted = restrict_indices(profile, keep)
            if not is_admissible(restricted, rule.domain_kind):
                continue
            restricted_choice = rule.choose(restricted)
            if _label(restricted, restricted_choice) != _label(profile, choice):
                return _restriction_witness(
                    Axiom.IIA, profile, restricted, removed, choice, restricted_choice
                )
    return None


def pareto_violation_at(rule: VotingRule, profile: StrictProfile) -> Witness | None:
    """Witness if every voter ranks some alternative above the rule's choice."""
    choice = rule.choose(profile)
    tally = profile.tally
    for x in range(profile.tau):
        if x != choice and tally.count(x, choice) == profile.n:
            return Witness(
                kind=Axiom.PARETO.value,
                profile_text=format_profile(profile),
                outputs={
                    "sigma(P)": _label(profile, choice),
                    "dominated by": _label(profile, x),
                },
                detail="the selected alternative is Pareto dominated",
            )
    return None


def sigma2_violation_at(rule: VotingRule, profile: StrictProfile) -> Witness | None:
    """Witness if, on two alternatives, the rule disagrees with strict majority."""
    if profile.tau != 2:
        return None
    choice = rule.choose(profile)
    tally = profile.tally
    winners = [x for x in range(2) if tally.majority(x, 1 - x)]
    if all((choice == x) == (x in winners) for x in range(2)):
        return None
    return Witness(
        kind=Axiom.SIGMA2.value,
        profile_text=format_profile(profile),
        outputs={
            "sigma(P)": _label(profile, choice),
            "majority": _label(profile, winners[0]) if winners else "none",
        },
        detail="on two alternatives the strict-majority top is not selected",
    )


def pairwise_violation_at(rule: VotingRule, profile: StrictProfile) -> Witness | None:
    """Witness if the winner loses the restriction to itself and some rival."""
    choice = rule.choose(profile)
    for y in range(profile.tau):
        if y == choice:
            continue
        restricted = restrict_indices(profile, {choice, y})
        if not is_admissible(restricted, rule.domain_kind):
            continue
        restricted_choice = rule.choose(restricted)
        if _label(restricted, restricted_choice) != _label(profile, choice):
            removed = [a for a in range(profile.tau) if a not in (choice, y)]
            return _restriction_witness(
                Axiom.PAIRWISE_CONSISTENCY,
                profile,
                restricted,
                removed,
                choice,
                restricted_choice,
            )
    return None


def _sweep(
    axiom: Axiom,
    rule: VotingRule,
    universe: Universe,
    finder: ViolationFinder,
    profiles: Iterable[StrictProfile] | None = None,
) -> Verdict:
    logger.debug(f"Checking {axiom.value} of {rule.name} on {universe.describe()}")
    checked = 0
    for profile in profiles if profiles is not None else enumerate_universe(universe):
        checked += 1
        witness = finder(rule, profile)
        if witness is not None:
            logger.info(f"{rule.name} violates {axiom.value} at [{profile}]")
            return Verdict(
                axiom=axiom.value,
                rule=rule.name,
                universe=universe,
                holds=False,
                witness=witness,
                profiles_checked=checked,
            )
    return Verdict(
        axiom=axiom.value,
        rule=rule.name,
        universe=universe,
        holds=True,
        profiles_checked=checked,
    )


def check_unanimity(rule: VotingRule, universe: Universe) -> Verdict:
    """Check that the rule selects the common top whenever there is one."""
    return _sweep(Axiom.UNANIMITY, rule, universe, unanimity_violation_at)


def check_anonymity(
    rule: VotingRule, universe: Universe, full_group: bool = False
) -> Verdict:
    """
    Check invariance under voter permutations.

    Adjacent voter swaps generate the group; ``full_group`` tries every
    permutation instead.
    """
    return _sweep(
        Axiom.ANONYMITY,
        rule,
        universe,
        lambda r, p: anonymity_violation_at(r, p, full_group),
    )


def check_neutrality(
    rule: VotingRule, universe: Universe, full_group: bool = False
) -> Verdict:
    """Check equivariance under relabelings (adjacent swaps unless ``full_group``)."""
    return _sweep(
        Axiom.NEUTRALITY,
        rule,
        universe,
        lambda r, p: neutrality_violation_at(r, p, full_group),
    )


def check_iia(rule: VotingRule, universe: Universe) -> Verdict:
    """
    Check independence of irrelevant alternatives.

    A restriction without a strong Condorcet winner is outside the
    Condorcet domain and is skipped rather than counted as a violation.
    """
    return _sweep(Axiom.IIA, rule, universe, iia_violation_at)


def check_pareto(rule: VotingRule, universe: Universe) -> Verdict:
    """Check that the rule never selects a Pareto-dominated alternative."""
    return _sweep(Axiom.PARETO, rule, universe, pareto_violation_at)


def check_sigma2(rule: VotingRule, universe: Universe) -> Verdict:
    """
    Check Σ₂ membership on the admissible two-alternative profiles.

    Raises:
        PreconditionError: If the universe does not contain size 2.
    """
    if 2 not in universe.tau_range:
        raise PreconditionError(
            f"Σ₂ needs two-alternative profiles; universe has {universe.describe()}"
        )
    return _sweep(
        Axiom.SIGMA2,
        rule,
        universe,
        sigma2_violation_at,
        enumerate_profiles(universe, 2),
    )


def check_pairwise_consistency(rule: VotingRule, universe: Universe) -> Verdict:
    """Check that the winner also wins every admissible two-alternative restriction."""
    return _sweep(Axiom.PAIRWISE_CONSISTENCY, rule, universe, pairwise_violation_at)


def check_dictatorship(rule: VotingRule, universe: Universe) -> int | None:
    """
    Find a voter whose top the rule always selects.

    Args:
        rule: Rule under test.
        universe: Universe to sweep.

    Returns:
        The least such voter (1-based), or None if there is none.
    """
    candidates = set(range(universe.n))
    for profile in enumerate_universe(universe):
        choice = rule.choose(profile)
        candidates = {i for i in candidates if profile.rankings[i][0] == choice}
        if not candidates:
            logger.debug(
                f"{rule.name} is not dictatorial: last candidate out at [{profile}]"
            )
            return None
    return min(candidates) + 1


def axiom_profile(
    rule: VotingRule,
    universe: Universe,
    full_group: bool = False,
) -> dict[str, Verdict]:
    """
    Verdicts of every axiom checker applicable to the universe.

    Σ₂ is included only when the universe contains two-alternative profiles.
    """
    verdicts = {
        Axiom.UNANIMITY.value: check_unanimity(rule, universe),
        Axiom.ANONYMITY.value: check_anonymity(rule, universe, full_group),
        Axiom.NEUTRALITY.value: check_neutrality(rule, universe, full_group),
        Axiom.IIA.value: check_iia(rule, universe),
        Axiom.PARETO.value: check_pareto(rule, universe),
    }
    if 2 in universe.tau_range:
        verdicts[Axiom.SIGMA2.value] = check_sigma2(rule, universe)
    verdicts[Axiom.PAIRWISE_CONSISTENCY.value] = check_pairwise_consistency(
        rule, universe
    )
    return verdicts


def find_disagreement(
    rule: VotingRule, other: VotingRule, universe: Universe
) -> StrictProfile | None:
    """First enumerated profile where two rules choose differently."""
    for profile in enumerate_universe(universe):
        if rule.choose(profile) != other.choose(profile):
            return profile
    return None

"""
Selfselect Verifier - Self-Selectivity.

This module implements the induced preferences voters hold over a finite
set of voting rules, the compatible linearizations of those preferences,
and the binary and universal self-selectivity checkers.

Rival rules are quantified through their outcomes: a set of rules is
represented by a RuleSlotSet whose slot 0 is the rule under test and whose
other slots hold the alternatives the rivals select at the base profile.
Since relabeling acts freely on strict profiles, every outcome vector is
realized by some set of distinct neutral rules, so sweeping outcome
vectors is the same as sweeping rival rules. ``binary_ss_oracle`` checks
the same condition against an explicit rival rule.
"""

import itertools
import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from selfselect.core.axioms import PreconditionError
from selfselect.core.profile_format import format_profile
from selfselect.core.profiles import (
    AlternativeSet,
    ProfileError,
    StrictProfile,
    WeakProfile,
    enumerate_universe,
    identity,
    invert,
    is_admissible,
    transport,
)
from selfselect.core.rules import VotingRule
from selfselect.models.universe import DomainKind, Universe
from selfselect.models.verdicts import (
    CompatibleChoice,
    SSVerdict,
    SSWitness,
    SSWitnessKind,
)

logger = logging.getLogger("self_selectivity")

RULE_SLOT = "sigma"
BINARY_SS = "binary-ss"
UNIVERSAL_SS = "universal-ss"


@dataclass(frozen=True)
class RuleSlotSet:
    """
    A finite set of rules seen through their outcomes at one profile.

    Attributes:
        outcomes: Per slot, the alternative index the slot's rule selects.
            Slot 0 is the rule under test; outcomes may repeat.
    """

    outcomes: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.outcomes) < 2:
            raise ProfileError(
                f"A rule set needs at least two slots, got {self.outcomes}"
            )

    @property
    def m(self) -> int:
        """Number of slots."""
        return len(self.outcomes)

    @property
    def labels(self) -> tuple[str, ...]:
        """Slot names: ``sigma`` then ``r1, r2, ...``."""
        return (RULE_SLOT, *(f"r{j}" for j in range(1, self.m)))

    @property
    def alt_set(self) -> AlternativeSet:
        """The slots as an alternative set."""
        return AlternativeSet(self.labels)


def format_slots(profile: StrictProfile, slots: RuleSlotSet) -> str:
    """Render as ``slots: sigma-><label>, r1-><label>, ...``."""
    pairs = (
        f"{name}->{profile.alt_set.label(outcome)}"
        for name, outcome in zip(slots.labels, slots.outcomes)
    )
    return "slots: " + ", ".join(pairs)


def induce_weak_profile(profile: StrictProfile, slots: RuleSlotSet) -> WeakProfile:
    """
    Voters' preferences over slots induced by their preferences over outcomes.

    A voter weakly prefers slot ``s`` to slot ``t`` when the voter ranks the
    outcome of ``s`` at least as high as the outcome of ``t``.

    Raises:
        ProfileError: If an outcome is not an alternative of the profile.
    """
    for outcome in slots.outcomes:
        if not 0 <= outcome < profile.tau:
            raise ProfileError(
                f"Slot outcome {outcome} is not an alternative of a "
                f"{profile.tau}-alternative profile"
            )

    orders = []
    for ranking in profile.rankings:
        classes = []
        for alternative in ranking:
            block = frozenset(
                s for s, o in enumerate(slots.outcomes) if o == alternative
            )
            if block:
                classes.append(block)
        orders.append(tuple(classes))
    return WeakProfile(slots.alt_set, tuple(orders))


def render_weak_order(weak: WeakProfile, voter: int) -> str:
    """Render one voter's weak order as ``sigma ~ r2 > r1``."""
    return " > ".join(" ~ ".join(block) for block in weak.labelled_orders()[voter])


def _voter_linearizations(classes: Sequence[frozenset[int]]) -> list[tuple[int, ...]]:
    options = itertools.product(*(itertools.permutations(sorted(c)) for c in classes))
    return [tuple(itertools.chain.from_iterable(choice)) for choice in options]


def linearizations(
    weak: WeakProfile, domain_kind: DomainKind
) -> Iterator[StrictProfile]:
    """
    Yield the admissible strict profiles compatible with a weak profile.

    Each indifference class is broken into every linear order; profiles
    come voter 1 outermost, classes ordered by their members' indices.
    """
    per_voter = [_voter_linearizations(classes) for classes in weak.orders]
    for rankings in itertools.product(*per_voter):
        candidate = StrictProfile(weak.alt_set, rankings)
        if is_admissible(candidate, domain_kind):
            yield candidate


def self_selection_by_bijection(
    rule: VotingRule, compatible: StrictProfile, beta: Sequence[int]
) -> int:
    """
    The slot a neutral rule elects at a compatible profile, via bijection ``beta``.

    The compatible profile is carried onto the canonical alternative set by
    ``beta`` and the rule's choice is carried back by ``beta^-1``.
    """
    beta = tuple(beta)
    chosen = rule.choose(transport(compatible, beta))
    return invert(beta)[chosen]


def _elected_slots(
    rule: VotingRule, profile: StrictProfile, slots: RuleSlotSet
) -> Iterator[tuple[StrictProfile, int]]:
    weak = induce_weak_profile(profile, slots)
    beta = identity(slots.m)
    for compatible in linearizations(weak, rule.domain_kind):
        yield compatible, self_selection_by_bijection(rule, compatible, beta)


def compatible_choices(
    rule: VotingRule, profile: StrictProfile, slots: RuleSlotSet
) -> list[tuple[StrictProfile, int]]:
    """
    Every admissible compatible profile with the slot the rule elects there.

    Args:
        rule: Neutral rule under test.
        profile: Base profile.
        slots: Slot outcomes at the base profile.

    Returns:
        ``(compatible profile, elected slot)`` pairs in enumeration order.
    """
    return list(_elected_slots(rule, profile, slots))


def self_selection_at(
    rule: VotingRule,
    profile: StrictProfile,
    slots: RuleSlotSet,
    vacuous_pass: bool = False,
    fast_path: bool = True,
) -> bool:
    """
    Whether the rule elects itself at some compatible profile.

    Args:
        rule: Neutral rule under test.
        profile: Base profile.
        slots: Slot outcomes; slot 0 is the rule under test.
        vacuous_pass: Answer when no compatible profile is admissible.
        fast_path: Answer True without search when every slot has the same
            outcome. Every voter is then indifferent between all slots, and
            a neutral rule can be relabeled onto slot 0.

    Returns:
        True if some compatible profile elects slot 0.
    """
    if fast_path and len(set(slots.outcomes)) == 1:
        return True
    found = False
    for _, elected in _elected_slots(rule, profile, slots):
        if elected == 0:
            return True
        found = True
    return vacuous_pass and not found


def _witness(rule: VotingRule, profile: StrictProfile, slots: RuleSlotSet) -> SSWitness:
    weak = induce_weak_profile(profile, slots)
    choices = compatible_choices(rule, profile, slots)
    kind = SSWitnessKind.NO_SELF_SELECTION
    if not choices:
        kind = SSWitnessKind.EMPTY_COMPATIBLE_SET
    return SSWitness(
        kind=kind,
        profile_text=format_profile(profile),
        rule_choice=profile.alt_set.label(rule.choose(profile)),
        slots=format_slots(profile, slots),
        induced=[render_weak_order(weak, voter) for voter in range(weak.n)],
        compatible=[
            CompatibleChoice(
                profile_text=format_profile(compatible),
                chosen=slots.labels[elected],
            )
            for compatible, elected in choices
        ],
    )


def _sweep(
    axiom: str,
    rule: VotingRule,
    universe: Universe,
    sizes: Sequence[int],
    include_same_outcome: bool,
    vacuous_pass: bool,
    k: int | None = None,
) -> SSVerdict:
    logger.debug(f"Checking {axiom} of {rule.name} on {universe.describe()}")
    checked = 0
    for m in sizes:
        for profile in enumerate_universe(universe):
            choice = rule.choose(profile)
            for rivals in itertools.product(range(profile.tau), repeat=m - 1):
                if not include_same_outcome and all(y == choice for y in rivals):
                    continue
                checked += 1
                slots = RuleSlotSet((choice, *rivals))
                if self_selection_at(rule, profile, slots, vacuous_pass):
                    continue
                logger.info(
                    f"{rule.name} fails {axiom} at [{profile}] "
                    f"{format_slots(profile, slots)}"
                )
                return SSVerdict(
                    axiom=axiom,
                    rule=rule.name,
                    universe=universe,
                    k=k,
                    holds=False,
                    witness=_witness(rule, profile, slots),
                    cases_checked=checked,
                )
    return SSVerdict(
        axiom=axiom,
        rule=rule.name,
        universe=universe,
        k=k,
        holds=True,
        cases_checked=checked,
    )


def check_binary_ss(
    rule: VotingRule,
    universe: Universe,
    include_same_outcome: bool = True,
    vacuous_pass: bool = False,
) -> SSVerdict:
    """
    Check binary self-selectivity on a universe.

    For every admissible profile and every rival outcome, the rule must
    elect itself at some profile compatible with the induced preferences
    over the pair of rules.

    Args:
        rule: Neutral rule under test.
        universe: Universe to sweep.
        include_same_outcome: Also test rivals agreeing with the rule.
        vacuous_pass: Let an empty compatible set count as a pass.

    Returns:
        The verdict, with the first failure as witness.
    """
    return _sweep(BINARY_SS, rule, universe, [2], include_same_outcome, vacuous_pass)


def check_universal_ss(
    rule: VotingRule,
    universe: Universe,
    k: int,
    include_same_outcome: bool = True,
    vacuous_pass: bool = False,
) -> SSVerdict:
    """
    Check universal self-selectivity against rule sets of up to ``k`` rules.

    Rule-set sizes are swept outermost, so the size-2 pass reproduces the
    binary check verdict for verdict and witness for witness.

    Raises:
        PreconditionError: If ``k < 2`` or ``k`` exceeds the universe's largest size.
    """
    if not 2 <= k <= universe.tau_max:
        raise PreconditionError(
            f"k must lie in 2..tau_max={universe.tau_max}, got {k}"
        )
    return _sweep(
        UNIVERSAL_SS,
        rule,
        universe,
        range(2, k + 1),
        include_same_outcome,
        vacuous_pass,
        k=k,
    )


def binary_ss_oracle(
    rule: VotingRule,
    profile: StrictProfile,
    rival: VotingRule,
    vacuous_pass: bool = False,
) -> bool:
    """
    Binary self-selection at one profile against an explicit rival rule.

    Builds the voters' preferences over ``{rule, rival}`` from the two rules'
    actual choices, enumerates the compatible strict profiles, and carries
    each onto ``a1, a2`` with the rival first.

    Raises:
        PreconditionError: If ``rival`` is the rule under test.
    """
    if rival is rule or rival.name == rule.name:
        raise PreconditionError(f"rival must differ from {rule.name}")

    own = rule.choose(profile)
    other = rival.choose(profile)
    # Index 0 is the rival, index 1 the rule under test.
    options: list[list[tuple[int, int]]] = []
    for voter in range(profile.n):
        if own == other:
            options.append([(1, 0), (0, 1)])
        elif profile.prefers(voter, own, other):
            options.append([(1, 0)])
        else:
            options.append([(0, 1)])

    target = AlternativeSet.canonical(2)
    found = False
    for rankings in itertools.product(*options):
        compatible = StrictProfile(target, rankings)
        if not is_admissible(compatible, rule.domain_kind):
            continue
        found = True
        if rule.choose(compatible) == 1:
            return True
    return vacuous_pass and not found



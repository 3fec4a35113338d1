"""
Selfselect Verifier - Verification Campaigns.

This module replays the plurality/Borda example exactly and runs the
campaigns that test the characterization results on a truncated universe:

- theorem1: binary and universal self-selectivity agree on every rule.
- corollary1: on the unrestricted domain, the binary self-selective
  unanimous neutral rules are the dictatorships.
- theorem2: on the Condorcet domain with odd n, the Condorcet rule is
  unanimous, neutral, anonymous and binary self-selective, and every other
  sampled or perturbed rule is not.
- corollary2: the same with universal self-selectivity.
- claims: the axiom implications the characterizations are built from.

Campaigns are coroutines that dispatch one task per rule and merge the
results in dispatch order. Each returns a CampaignReport.
"""

import logging
import time
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from functools import partial
from typing import Any

from selfselect.core.axioms import (
    Axiom,
    PreconditionError,
    check_anonymity,
    check_dictatorship,
    check_iia,
    check_neutrality,
    check_pairwise_consistency,
    check_pareto,
    check_sigma2,
    check_unanimity,
    find_disagreement,
)
from selfselect.core.profiles import (
    AlternativeSet,
    StrictProfile,
    WeakProfile,
    identity,
    make_profile,
)
from selfselect.core.rules import (
    RuleConstraintError,
    VotingRule,
    borda_scores,
    borda_tb,
    catalog,
    condorcet_rule,
    plurality_scores,
    plurality_tb,
    random_extension,
    random_iia_rule,
    random_neutral_rule,
    single_orbit_perturbations,
)
from selfselect.core.self_selectivity import (
    RULE_SLOT,
    RuleSlotSet,
    binary_ss_oracle,
    check_binary_ss,
    check_universal_ss,
    induce_weak_profile,
    linearizations,
    render_weak_order,
    self_selection_at,
    self_selection_by_bijection,
)
from selfselect.core.task_dispatcher import run_tasks
from selfselect.models.reports import AssertionResult, CampaignReport, RuleResult
from selfselect.models.universe import DomainKind, Universe
from selfselect.models.verdicts import SSVerdict, Verdict, Witness

logger = logging.getLogger("theorems")

EXAMPLE_ALTERNATIVES = ("x", "y", "z", "w")
EXAMPLE_RANKINGS = (
    ("x", "y", "z", "w"),
    ("x", "y", "z", "w"),
    ("x", "y", "z", "w"),
    ("y", "z", "w", "x"),
    ("y", "z", "w", "x"),
)
SECOND_EXAMPLE_RANKINGS = (
    ("x", "y", "w", "z"),
    ("x", "y", "z", "w"),
    ("y", "w", "z", "x"),
    ("z", "y", "w", "x"),
    ("w", "y", "z", "x"),
)
# Names of the two rules when they are the alternatives.
EXAMPLE_RULE_LABELS = ("p", "b")

EXAMPLE_UNIVERSE = Universe(n=5, tau_min=2, tau_max=4)

AXIOM_CHECKS: dict[str, Callable[[VotingRule, Universe], Verdict]] = {
    Axiom.UNANIMITY.value: check_unanimity,
    Axiom.ANONYMITY.value: check_anonymity,
    Axiom.NEUTRALITY.value: check_neutrality,
    Axiom.IIA.value: check_iia,
    Axiom.PARETO.value: check_pareto,
    Axiom.SIGMA2.value: check_sigma2,
    Axiom.PAIRWISE_CONSISTENCY.value: check_pairwise_consistency,
}


class Campaign(str, Enum):
    """Verification campaigns."""

    EXAMPLE1 = "example1"
    THEOREM1 = "theorem1"
    COROLLARY1 = "corollary1"
    THEOREM2 = "theorem2"
    COROLLARY2 = "corollary2"
    CLAIMS = "claims"

    @property
    def natural_domain(self) -> DomainKind | None:
        """Domain the campaign runs on when none is requested."""
        if self in (Campaign.THEOREM2, Campaign.COROLLARY2):
            return DomainKind.CONDORCET
        return None


class ExampleMismatchError(AssertionError):
    """Exception raised when the example replay disagrees with its tables."""

    def __init__(self, message: str, diff: str) -> None:
        """
        Initialize ExampleMismatchError.

        Args:
            message: Summary of the mismatch.
            diff: Expected versus computed values, one line per mismatch.
        """
        super().__init__(f"{message}\n{diff}")
        self.diff = diff


def example_profile() -> StrictProfile:
    """The five-voter profile ``P`` over ``{x, y, z, w}``."""
    return make_profile(EXAMPLE_RANKINGS, AlternativeSet(EXAMPLE_ALTERNATIVES))


def second_example_profile() -> StrictProfile:
    """The five-voter profile ``P'`` over ``{x, y, z, w}``."""
    return make_profile(SECOND_EXAMPLE_RANKINGS, AlternativeSet(EXAMPLE_ALTERNATIVES))


@dataclass
class _ExampleCheck:
    group: str
    name: str
    expected: object
    computed: object
    rule: str | None = None

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def to_assertion(self) -> AssertionResult:
        return AssertionResult(
            group=self.group,
            name=self.name,
            rule=self.rule,
            passed=self.passed,
            detail=f"expected {self.expected!r}, computed {self.computed!r}",
        )


def _rule_election(
    profile: StrictProfile,
    plurality: VotingRule,
    borda: VotingRule,
) -> tuple[WeakProfile, list[StrictProfile], dict[str, str]]:
    """Induced profile over ``{p, b}``, its linearizations and each rule's pick."""
    slots = RuleSlotSet((plurality.choose(profile), borda.choose(profile)))
    induced = induce_weak_profile(profile, slots)
    induced = WeakProfile(AlternativeSet(EXAMPLE_RULE_LABELS), induced.orders)
    compatible = list(linearizations(induced, DomainKind.UNRESTRICTED))
    picks = {}
    if len(compatible) == 1:
        beta = identity(2)
        for label, rule in zip(EXAMPLE_RULE_LABELS, (plurality, borda)):
            elected = self_selection_by_bijection(rule, compatible[0], beta)
            picks[label] = EXAMPLE_RULE_LABELS[elected]
    return induced, compatible, picks


def replay_example1() -> CampaignReport:
    """
    Reconstruct the plurality/Borda example.

    Checks the rule outputs and Borda counts at both base profiles, the
    induced profiles over the two rules, each rule's pick at the unique
    compatible profile, and the two non-self-selectivity conclusions.

    Returns:
        The report, all assertions passed.

    Raises:
        ExampleMismatchError: If any computed value differs from the tables.
    """
    started = time.perf_counter()
    plurality = plurality_tb(1)
    borda = borda_tb(4)
    checks: list[_ExampleCheck] = []

    # profile, plurality choice, Borda choice, plurality scores, Borda counts
    expected = {
        "profile P": (example_profile(), "x", "y", [3, 2, 0, 0], [14, 17, 12, 7]),
        "profile P'": (
            second_example_profile(), "x", "y", [2, 1, 1, 1], [11, 16, 11, 12]
        ),
    }
    expected_induced = {
        "profile P": ["p > b"] * 3 + ["b > p"] * 2,
        "profile P'": ["p > b"] * 2 + ["b > p"] * 3,
    }
    expected_picks = {
        "profile P": {"p": "p", "b": "p"},
        "profile P'": {"p": "b", "b": "b"},
    }
    induced_group = {"profile P": "rules at P", "profile P'": "rules at P'"}

    for group, (profile, p_choice, b_choice, p_scores, b_scores) in expected.items():
        p_label = profile.alt_set.label(plurality.choose(profile))
        b_label = profile.alt_set.label(borda.choose(profile))
        checks.extend(
            [
                _ExampleCheck(
                    group, "plurality choice", p_choice, p_label, plurality.name
                ),
                _ExampleCheck(group, "Borda choice", b_choice, b_label, borda.name),
                _ExampleCheck(
                    group, "plurality scores", p_scores, plurality_scores(profile)
                ),
                _ExampleCheck(group, "Borda counts", b_scores, borda_scores(profile)),
            ]
        )
        induced, compatible, picks = _rule_election(profile, plurality, borda)
        rendered = [render_weak_order(induced, voter) for voter in range(induced.n)]
        target = induced_group[group]
        checks.extend(
            [
                _ExampleCheck(
                    target, "induced profile", expected_induced[group], rendered
                ),
                _ExampleCheck(target, "unique compatible profile", 1, len(compatible)),
                _ExampleCheck(target, "rule picks", expected_picks[group], picks),
            ]
        )

    p_first = example_profile()
    p_second = second_example_profile()
    x, y = 0, 1
    checks.extend(
        [
            _ExampleCheck(
                "conclusions",
                "Borda does not select itself against plurality at P",
                False,
                self_selection_at(borda, p_first, RuleSlotSet((y, x))),
                borda.name,
            ),
            _ExampleCheck(
                "conclusions",
                "plurality selects itself against Borda at P",
                True,
                self_selection_at(plurality, p_first, RuleSlotSet((x, y))),
                plurality.name,
            ),
            _ExampleCheck(
                "conclusions",
                "plurality does not select itself against Borda at P'",
                False,
                self_selection_at(plurality, p_second, RuleSlotSet((x, y))),
                plurality.name,
            ),
            _ExampleCheck(
                "conclusions",
                "explicit-rival oracle agrees at P",
                (False, True),
                (
                    binary_ss_oracle(borda, p_first, plurality),
                    binary_ss_oracle(plurality, p_first, borda),
                ),
            ),
            _ExampleCheck(
                "conclusions",
                "explicit-rival oracle agrees at P'",
                False,
                binary_ss_oracle(plurality, p_second, borda),
            ),
        ]
    )

    mismatches = [check for check in checks if not check.passed]
    if mismatches:
        diff = "\n".join(
            f"[{c.group}] {c.name}: expected {c.expected!r}, computed {c.computed!r}"
            for c in mismatches
        )
        raise ExampleMismatchError(f"{len(mismatches)} example values differ", diff)

    logger.info(f"Example replay matched {len(checks)} values")
    return CampaignReport.build(
        campaign=Campaign.EXAMPLE1.value,
        universes=[EXAMPLE_UNIVERSE],
        rules=[RuleResult(rule=plurality.name), RuleResult(rule=borda.name)],
        assertions=[check.to_assertion() for check in checks],
        seeds=[],
        elapsed_seconds=time.perf_counter() - started,
    )


@dataclass
class RuleFacts:
    """
    What a campaign task computed about one rule.

    Attributes:
        rule: The rule.
        verdicts: Axiom verdicts by axiom name.
        dictator: Dictator voter (1-based), if computed and found.
        binary: Binary self-selectivity verdict, if computed.
        universal: Universal self-selectivity verdict, if computed.
        disagreement: First profile where the rule differs from the
            reference rule, if a reference was given.
    """

    rule: VotingRule
    verdicts: dict[str, Verdict] = field(default_factory=dict)
    dictator: int | None = None
    binary: SSVerdict | None = None
    universal: SSVerdict | None = None
    disagreement: StrictProfile | None = None

    def holds(self, axiom: str) -> bool:
        """Whether a computed axiom holds."""
        return self.verdicts[axiom].holds

    def ss_verdict(self, universal: bool = False) -> SSVerdict:
        """
        The binary or universal verdict.

        Raises:
            LookupError: If that verdict was not computed.
        """
        verdict = self.universal if universal else self.binary
        if verdict is None:
            kind = "universal" if universal else "binary"
            raise LookupError(f"no {kind} verdict computed for {self.rule.name}")
        return verdict

    def to_result(self, k: int | None = None) -> RuleResult:
        """Serializable summary."""
        axioms = {name: verdict.holds for name, verdict in self.verdicts.items()}
        return RuleResult(
            rule=self.rule.name,
            axioms=axioms,
            binary_ss=self.binary,
            universal_ss=self.universal,
            k=k if self.universal is not None else None,
        )


def gather_facts(
    rule: VotingRule,
    universe: Universe,
    axioms: Sequence[str] = (),
    dictatorship: bool = False,
    binary: bool = False,
    k: int | None = None,
    reference: VotingRule | None = None,
    vacuous_pass: bool = False,
) -> RuleFacts:
    """
    Compute the requested facts about one rule.

    Args:
        rule: Rule under study.
        universe: Universe to sweep.
        axioms: Names of axioms to check.
        dictatorship: Search for a dictator.
        binary: Check binary self-selectivity.
        k: If given, check universal self-selectivity up to ``k`` rules.
        reference: Rule to search a disagreement with.
        vacuous_pass: Empty compatible sets count as self-selection.
    """
    facts = RuleFacts(rule)
    for axiom in axioms:
        facts.verdicts[axiom] = AXIOM_CHECKS[axiom](rule, universe)
    if dictatorship:
        facts.dictator = check_dictatorship(rule, universe)
    if binary:
        facts.binary = check_binary_ss(rule, universe, vacuous_pass=vacuous_pass)
    if k is not None:
        facts.universal = check_universal_ss(
            rule, universe, k, vacuous_pass=vacuous_pass
        )
    if reference is not None:
        facts.disagreement = find_disagreement(rule, reference, universe)
    return facts


async def collect_facts(
    rules: Sequence[VotingRule],
    universe: Universe,
    jobs: int = 1,
    **options: Any,
) -> list[RuleFacts]:
    """Run ``gather_facts`` for every rule, one task per rule, in rule order."""
    tasks = [
        (f"{i}:{rule.name}", partial(gather_facts, rule, universe, **options))
        for i, rule in enumerate(rules)
    ]
    return await run_tasks(tasks, jobs)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise PreconditionError(message)


def _require_k(universe: Universe, k: int) -> None:
    _require(
        2 <= k <= universe.tau_max,
        f"k must lie in 2..tau_max={universe.tau_max}, got {k}",
    )


async def verify_theorem1(
    universe: Universe,
    seeds: Sequence[int],
    k: int,
    jobs: int = 1,
    vacuous_pass: bool = False,
) -> CampaignReport:
    """
    Check that binary and universal self-selectivity agree rule for rule.

    Runs on both domain kinds over the catalog and one sampled neutral
    rule per seed. Verdicts and witnesses must match.

    Raises:
        PreconditionError: If ``k`` is outside ``2..tau_max``.
    """
    _require_k(universe, k)
    started = time.perf_counter()
    universes = [universe.with_domain(kind) for kind in DomainKind]
    assertions: list[AssertionResult] = []
    results: list[RuleResult] = []

    for domain_universe in universes:
        rules = catalog(domain_universe) + [
            random_neutral_rule(seed, domain_universe) for seed in seeds
        ]
        logger.info(f"theorem1: {len(rules)} rules on {domain_universe.describe()}")
        facts = await collect_facts(
            rules, domain_universe, jobs, binary=True, k=k, vacuous_pass=vacuous_pass
        )
        group = f"equivalence-{domain_universe.domain_kind.value}"
        for fact in facts:
            binary = fact.ss_verdict()
            universal = fact.ss_verdict(universal=True)
            assertions.append(
                AssertionResult(
                    group=group,
                    name="binary and universal verdicts agree",
                    rule=fact.rule.name,
                    passed=(
                        binary.holds == universal.holds
                        and binary.witness == universal.witness
                    ),
                    detail=(
                        f"binary holds={binary.holds}, "
                        f"universal holds={universal.holds}"
                    ),
                    witness=binary.witness or universal.witness,
                )
            )
            results.append(fact.to_result(k))

    return CampaignReport.build(
        campaign=Campaign.THEOREM1.value,
        universes=universes,
        rules=results,
        assertions=assertions,
        seeds=list(seeds),
        elapsed_seconds=time.perf_counter() - started,
    )


async def verify_corollary1(
    universe: Universe,
    seeds: Sequence[int],
    jobs: int = 1,
    vacuous_pass: bool = False,
) -> CampaignReport:
    """
    Check that the binary self-selective unanimous neutral rules are dictatorial.

    Every dictatorship must pass; every unanimous neutral rule that is not
    dictatorial on the universe must fail with a witness.

    Raises:
        PreconditionError: Unless the domain is unrestricted and
            ``tau_max >= 3``; at ``tau_max = 2`` odd-n majority passes
            without being dictatorial.
    """
    _require(
        universe.domain_kind == DomainKind.UNRESTRICTED,
        "corollary1 needs the unrestricted domain",
    )
    _require(
        universe.tau_max >= 3,
        f"corollary1 needs tau_max >= 3, got {universe.tau_max}",
    )
    started = time.perf_counter()
    rules = catalog(universe) + [
        random_neutral_rule(seed, universe, unanimous=True) for seed in seeds
    ]
    facts = await collect_facts(
        rules,
        universe,
        jobs,
        axioms=(Axiom.UNANIMITY.value, Axiom.NEUTRALITY.value),
        dictatorship=True,
        binary=True,
        vacuous_pass=vacuous_pass,
    )

    assertions = []
    for fact in facts:
        binary = fact.ss_verdict()
        if fact.dictator is not None:
            assertions.append(
                AssertionResult(
                    group="dictatorships-pass",
                    name=f"rule dictated by voter {fact.dictator} self-selects",
                    rule=fact.rule.name,
                    passed=binary.holds,
                    witness=binary.witness,
                )
            )
        elif fact.holds(Axiom.UNANIMITY.value) and fact.holds(Axiom.NEUTRALITY.value):
            assertions.append(
                AssertionResult(
                    group="non-dictatorial-fail",
                    name="unanimous neutral non-dictatorial rule fails",
                    rule=fact.rule.name,
                    passed=not binary.holds,
                    detail="" if not binary.holds else "rule self-selects",
                    witness=binary.witness,
                )
            )
        else:
            logger.info(f"corollary1: {fact.rule.name} is outside the hypothesis")

    return CampaignReport.build(
        campaign=Campaign.COROLLARY1.value,
        universes=[universe],
        rules=[fact.to_result() for fact in facts],
        assertions=assertions,
        seeds=list(seeds),
        elapsed_seconds=time.perf_counter() - started,
    )


def _require_condorcet_universe(universe: Universe, campaign: Campaign) -> None:
    _require(
        universe.domain_kind == DomainKind.CONDORCET,
        f"{campaign.value} needs the condorcet domain",
    )
    _require(universe.n % 2 == 1, f"{campaign.value} needs odd n, got {universe.n}")
    _require(
        universe.tau_max >= 3,
        f"{campaign.value} needs tau_max >= 3, got {universe.tau_max}",
    )


def elects_rival_at_unique_profile(verdict: SSVerdict) -> bool:
    """Whether a failure's only compatible profile elects a rival slot."""
    witness = verdict.witness
    return (
        witness is not None
        and len(witness.compatible) == 1
        and witness.compatible[0].chosen != RULE_SLOT
    )


async def _condorcet_campaign(
    campaign: Campaign,
    universe: Universe,
    seeds: Sequence[int],
    jobs: int,
    vacuous_pass: bool,
    k: int | None,
) -> CampaignReport:
    started = time.perf_counter()
    universal = k is not None
    check = "universal" if universal else "binary"

    c = condorcet_rule()
    anonymous_samples = [
        random_neutral_rule(seed, universe, unanimous=True, anonymous=True)
        for seed in seeds
    ]
    sigma2_rules = list(single_orbit_perturbations(c, universe, min_tau=3))
    sigma2_rules += [random_extension(c, seed, universe, from_tau=3) for seed in seeds]
    options: dict[str, Any] = {"binary": True, "k": k, "vacuous_pass": vacuous_pass}

    [c_facts] = await collect_facts(
        [c],
        universe,
        jobs,
        axioms=(Axiom.UNANIMITY.value, Axiom.NEUTRALITY.value, Axiom.ANONYMITY.value),
        **options,
    )
    sample_facts = await collect_facts(
        anonymous_samples, universe, jobs, reference=c, **options
    )
    sigma2_facts = await collect_facts(
        sigma2_rules,
        universe,
        jobs,
        axioms=(Axiom.SIGMA2.value,),
        reference=c,
        **options,
    )

    assertions: list[AssertionResult] = []
    if not universal:
        for axiom in (Axiom.UNANIMITY, Axiom.NEUTRALITY, Axiom.ANONYMITY):
            verdict = c_facts.verdicts[axiom.value]
            assertions.append(
                AssertionResult(
                    group="statement1",
                    name=f"the Condorcet rule satisfies {axiom.value}",
                    rule=c.name,
                    passed=verdict.holds,
                    witness=verdict.witness,
                )
            )
    c_verdict = c_facts.ss_verdict(universal)
    assertions.append(
        AssertionResult(
            group="statement2",
            name=f"the Condorcet rule is {check} self-selective",
            rule=c.name,
            passed=c_verdict.holds,
            witness=c_verdict.witness,
        )
    )

    for fact in sample_facts:
        verdict = fact.ss_verdict(universal)
        if fact.disagreement is None:
            assertions.append(
                AssertionResult(
                    group="statement3",
                    name="sample equal to the Condorcet rule self-selects",
                    rule=fact.rule.name,
                    passed=verdict.holds,
                    witness=verdict.witness,
                )
            )
            continue
        assertions.append(
            AssertionResult(
                group="statement3",
                name=f"anonymous sample differing from c is not {check} self-selective",
                rule=fact.rule.name,
                passed=not verdict.holds,
                detail=f"differs from c at [{fact.disagreement}]",
                witness=verdict.witness,
            )
        )

    for fact in sigma2_facts:
        verdict = fact.ss_verdict(universal)
        in_sigma2 = fact.holds(Axiom.SIGMA2.value)
        if not in_sigma2 or fact.disagreement is None:
            assertions.append(
                AssertionResult(
                    group="claim3.4",
                    name="rule keeps two-alternative majority and differs from c",
                    rule=fact.rule.name,
                    passed=False,
                    detail=(
                        f"in sigma2={in_sigma2}, "
                        f"differs={fact.disagreement is not None}"
                    ),
                    witness=fact.verdicts[Axiom.SIGMA2.value].witness,
                )
            )
            continue
        assertions.append(
            AssertionResult(
                group="claim3.4",
                name="rule differing from c fails where its rival is elected",
                rule=fact.rule.name,
                passed=not verdict.holds and elects_rival_at_unique_profile(verdict),
                detail=f"differs from c at [{fact.disagreement}]",
                witness=verdict.witness,
            )
        )

    facts = [c_facts, *sample_facts, *sigma2_facts]
    if universal:
        for fact in facts:
            binary = fact.ss_verdict()
            univ = fact.ss_verdict(universal=True)
            assertions.append(
                AssertionResult(
                    group="theorem1-crosscheck",
                    name="universal verdict equals binary verdict",
                    rule=fact.rule.name,
                    passed=binary.holds == univ.holds,
                    witness=binary.witness or univ.witness,
                )
            )

    return CampaignReport.build(
        campaign=campaign.value,
        universes=[universe],
        rules=[fact.to_result(k) for fact in facts],
        assertions=assertions,
        seeds=list(seeds),
        elapsed_seconds=time.perf_counter() - started,
    )


async def verify_theorem2(
    universe: Universe,
    seeds: Sequence[int],
    jobs: int = 1,
    vacuous_pass: bool = False,
) -> CampaignReport:
    """
    Check the Condorcet characterization by binary self-selectivity.

    (a) The Condorcet rule is unanimous, neutral and anonymous.
    (b) It is binary self-selective.
    (c) Every sampled unanimous, neutral, anonymous rule differing from it
        is not.
    (d) Every rule with two-alternative majority differing from it (single
        orbit perturbations and random extensions) fails at a profile whose
        unique compatible profile elects the rival.

    Raises:
        PreconditionError: Unless the domain is Condorcet, n is odd and
            ``tau_max >= 3``.
    """
    _require_condorcet_universe(universe, Campaign.THEOREM2)
    return await _condorcet_campaign(
        Campaign.THEOREM2, universe, seeds, jobs, vacuous_pass, k=None
    )


async def verify_corollary2(
    universe: Universe,
    seeds: Sequence[int],
    k: int,
    jobs: int = 1,
    vacuous_pass: bool = False,
) -> CampaignReport:
    """
    Repeat the theorem2 sweeps with universal self-selectivity up to ``k`` rules.

    Also asserts every universal verdict equals the binary one.

    Raises:
        PreconditionError: As for theorem2, or if ``k`` is outside ``2..tau_max``.
    """
    _require_condorcet_universe(universe, Campaign.COROLLARY2)
    _require_k(universe, k)
    return await _condorcet_campaign(
        Campaign.COROLLARY2, universe, seeds, jobs, vacuous_pass, k=k
    )


def _implication(
    group: str,
    statement: str,
    facts: Sequence[RuleFacts],
    hypothesis: Callable[[RuleFacts], bool],
    conclusion: Callable[[RuleFacts], bool],
    witness: Callable[[RuleFacts], Witness | None] = lambda fact: None,
) -> list[AssertionResult]:
    assertions = []
    for fact in facts:
        if not hypothesis(fact):
            continue
        held = conclusion(fact)
        assertions.append(
            AssertionResult(
                group=group,
                name=statement,
                rule=fact.rule.name,
                passed=held,
                witness=None if held else witness(fact),
            )
        )
    assertions.append(
        AssertionResult(
            group=group,
            name=f"{statement}: hypothesis met by {len(assertions)} of {len(facts)}",
            passed=True,
        )
    )
    return assertions


async def verify_claims(
    universe: Universe,
    seeds: Sequence[int],
    jobs: int = 1,
    vacuous_pass: bool = False,
) -> CampaignReport:
    """
    Check the axiom implications over catalog and sampled rules.

    - Neutral binary self-selective rules satisfy IIA, and every neutral rule
      failing IIA fails binary self-selectivity (with the pairwise
      consistency step in between).
    - Unanimity and IIA imply the Pareto condition.
    - Neutrality, anonymity, IIA and Pareto imply two-alternative majority.
    - On the Condorcet domain, the only rule with two-alternative majority
      that is binary self-selective is the Condorcet rule.

    Besides the catalog, every seed contributes a unanimous sample, an
    anonymous unanimous sample and two IIA samples (one drawn
    anonymously), so the IIA hypotheses are met by sampled rules too.
    Samples whose constraints have no solution are skipped; on the
    unrestricted domain a cyclic profile with as many voters as
    alternatives already rules every anonymous neutral rule out.

    Raises:
        PreconditionError: If ``tau_max < 3``.
    """
    _require(
        universe.tau_max >= 3, f"claims need tau_max >= 3, got {universe.tau_max}"
    )
    started = time.perf_counter()
    condorcet = universe.domain_kind == DomainKind.CONDORCET

    rules = catalog(universe)
    rules += [random_neutral_rule(seed, universe, unanimous=True) for seed in seeds]
    samplers: dict[str, Callable[[int], VotingRule]] = {
        "anonymous": lambda seed: random_neutral_rule(
            seed, universe, unanimous=True, anonymous=True
        ),
        "IIA": lambda seed: random_iia_rule(seed, universe),
        "anonymous IIA": lambda seed: random_iia_rule(seed, universe, anonymous=True),
    }
    skipped = 0
    for label, sample in samplers.items():
        for seed in seeds:
            try:
                rules.append(sample(seed))
            except RuleConstraintError as e:
                skipped += 1
                logger.debug(f"claims: no {label} sample for seed {seed}: {e}")
    if skipped:
        logger.info(f"claims: skipped {skipped} infeasible samples")

    facts = await collect_facts(
        rules,
        universe,
        jobs,
        axioms=tuple(AXIOM_CHECKS),
        binary=True,
        reference=condorcet_rule() if condorcet else None,
        vacuous_pass=vacuous_pass,
    )

    def binary_holds(fact: RuleFacts) -> bool:
        return fact.ss_verdict().holds

    def holds_all(*axioms: Axiom) -> Callable[[RuleFacts], bool]:
        return lambda fact: all(fact.holds(a.value) for a in axioms)

    def violation(axiom: Axiom) -> Callable[[RuleFacts], Witness | None]:
        return lambda fact: fact.verdicts[axiom.value].witness

    neutral = holds_all(Axiom.NEUTRALITY)
    assertions = _implication(
        "claim2.1",
        "neutral binary self-selective rule satisfies IIA",
        facts,
        lambda f: neutral(f) and binary_holds(f),
        holds_all(Axiom.IIA),
        violation(Axiom.IIA),
    )
    assertions += _implication(
        "claim2.1",
        "neutral rule failing IIA is not binary self-selective",
        facts,
        lambda f: neutral(f) and not f.holds(Axiom.IIA.value),
        lambda f: not binary_holds(f),
    )
    assertions += _implication(
        "claim2.1",
        "binary self-selective rule is pairwise consistent",
        facts,
        binary_holds,
        holds_all(Axiom.PAIRWISE_CONSISTENCY),
        violation(Axiom.PAIRWISE_CONSISTENCY),
    )
    assertions += _implication(
        "claim3.2",
        "unanimous rule satisfying IIA is Paretian",
        facts,
        holds_all(Axiom.UNANIMITY, Axiom.IIA),
        holds_all(Axiom.PARETO),
        violation(Axiom.PARETO),
    )
    assertions += _implication(
        "claim3.3",
        "neutral anonymous Paretian IIA rule has two-alternative majority",
        facts,
        holds_all(Axiom.NEUTRALITY, Axiom.ANONYMITY, Axiom.IIA, Axiom.PARETO),
        holds_all(Axiom.SIGMA2),
        violation(Axiom.SIGMA2),
    )
    if condorcet:
        assertions += _implication(
            "claim3.4",
            "self-selective rule with two-alternative majority is the Condorcet rule",
            facts,
            lambda f: f.holds(Axiom.SIGMA2.value) and binary_holds(f),
            lambda f: f.disagreement is None,
        )

    return CampaignReport.build(
        campaign=Campaign.CLAIMS.value,
        universes=[universe],
        rules=[fact.to_result() for fact in facts],
        assertions=assertions,
        seeds=list(seeds),
        elapsed_seconds=time.perf_counter() - started,
    )


async def run_campaign(
    campaign: Campaign,
    universe: Universe,
    seeds: Sequence[int],
    k: int,
    jobs: int = 1,
    vacuous_pass: bool = False,
) -> CampaignReport:
    """
    Run a campaign by name.

    The example replay ignores every argument.
    """
    logger.info(
        f"Running {campaign.value} on {universe.describe()} with {len(seeds)} seeds"
    )
    if campaign == Campaign.EXAMPLE1:
        return replay_example1()
    if campaign == Campaign.THEOREM1:
        return await verify_theorem1(universe, seeds, k, jobs, vacuous_pass)
    if campaign == Campaign.COROLLARY1:
        return await verify_corollary1(universe, seeds, jobs, vacuous_pass)
    if campaign == Campaign.THEOREM2:
        return await verify_theorem2(universe, seeds, jobs, vacuous_pass)
    if campaign == Campaign.COROLLARY2:
        return await verify_corollary2(universe, seeds, k, jobs, vacuous_pass)
    return await verify_claims(universe, seeds, jobs, vacuous_pass)

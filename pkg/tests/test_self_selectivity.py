"""
Tests for Self-Selectivity.

These tests verify induced preferences over rule slots, compatible
linearizations, the per-profile self-selection test, and the binary and
universal checkers.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from selfselect.core.axioms import PreconditionError
from selfselect.core.profile_format import parse_profile
from selfselect.core.profiles import (
    AlternativeSet,
    ProfileError,
    enumerate_universe,
    linear_orders,
    make_profile,
)
from selfselect.core.rules import (
    VotingRule,
    borda_tb,
    catalog,
    dictatorship,
    plurality_tb,
    random_neutral_rule,
)
from selfselect.core.self_selectivity import (
    BINARY_SS,
    UNIVERSAL_SS,
    RuleSlotSet,
    binary_ss_oracle,
    check_binary_ss,
    check_universal_ss,
    compatible_choices,
    format_slots,
    induce_weak_profile,
    linearizations,
    render_weak_order,
    self_selection_at,
    self_selection_by_bijection,
)
from selfselect.core.theorems import example_profile
from selfselect.models.universe import DomainKind, Universe
from selfselect.models.verdicts import SSWitnessKind
from tests.strategies import profiles

SMALL = Universe(n=3, tau_max=3)
SMALL_CONDORCET = SMALL.with_domain(DomainKind.CONDORCET)


def split_profile():
    """Two voters with opposite rankings of a1, a2."""
    return make_profile([["a1", "a2"], ["a2", "a1"]], AlternativeSet.canonical(2))


class TestRuleSlots:
    """Tests for RuleSlotSet and the induced weak profile."""

    def test_slot_labels(self):
        """Test slot names and the slot alternative set."""
        slots = RuleSlotSet((0, 2, 1))
        assert slots.m == 3
        assert slots.labels == ("sigma", "r1", "r2")
        assert slots.alt_set.labels == ("sigma", "r1", "r2")

    def test_needs_two_slots(self):
        """Test that a single slot is rejected."""
        with pytest.raises(ProfileError):
            RuleSlotSet((0,))

    def test_format_slots(self):
        """Test the slot vector rendering."""
        assert format_slots(example_profile(), RuleSlotSet((1, 0))) == (
            "slots: sigma->y, r1->x"
        )

    def test_induced_profile_at_example(self):
        """Test the preferences over plurality (x) and Borda (y)."""
        profile = example_profile()
        weak = induce_weak_profile(profile, RuleSlotSet((0, 1)))
        rendered = [render_weak_order(weak, voter) for voter in range(weak.n)]
        assert rendered == ["sigma > r1"] * 3 + ["r1 > sigma"] * 2

    def test_shared_outcomes_are_indifferent(self):
        """Test that slots with the same outcome form one class."""
        weak = induce_weak_profile(example_profile(), RuleSlotSet((0, 0, 1)))
        assert render_weak_order(weak, 0) == "sigma ~ r1 > r2"
        assert render_weak_order(weak, 4) == "r2 > sigma ~ r1"

    def test_outcome_outside_profile(self):
        """Test that an outcome must be an alternative of the profile."""
        with pytest.raises(ProfileError):
            induce_weak_profile(example_profile(), RuleSlotSet((0, 4)))


class TestLinearizations:
    """Tests for compatible strict profiles."""

    def test_indifferent_voters_split_both_ways(self):
        """Test that every class is broken into every order."""
        weak = induce_weak_profile(split_profile(), RuleSlotSet((0, 0)))
        unrestricted = list(linearizations(weak, DomainKind.UNRESTRICTED))
        assert [p.rankings for p in unrestricted] == [
            ((0, 1), (0, 1)),
            ((0, 1), (1, 0)),
            ((1, 0), (0, 1)),
            ((1, 0), (1, 0)),
        ]

    def test_condorcet_domain_filters_ties(self):
        """Test that compatible profiles without a winner are dropped."""
        weak = induce_weak_profile(split_profile(), RuleSlotSet((0, 0)))
        condorcet = list(linearizations(weak, DomainKind.CONDORCET))
        assert [p.rankings for p in condorcet] == [((0, 1), (0, 1)), ((1, 0), (1, 0))]

    def test_strict_preferences_have_one_linearization(self):
        """Test that distinct outcomes leave a unique compatible profile."""
        weak = induce_weak_profile(example_profile(), RuleSlotSet((0, 1)))
        [compatible] = list(linearizations(weak, DomainKind.UNRESTRICTED))
        assert compatible.alt_set.labels == ("sigma", "r1")
        assert compatible.rankings == ((0, 1),) * 3 + ((1, 0),) * 2

    @given(profiles(min_tau=2, max_tau=3))
    def test_bijection_does_not_matter(self, profile):
        """Test that a neutral rule elects the same slot under every bijection."""
        rule = plurality_tb(1)
        elected = {
            self_selection_by_bijection(rule, profile, beta)
            for beta in linear_orders(profile.tau)
        }
        assert len(elected) == 1


class TestSelfSelectionAt:
    """Tests for the per-profile self-selection test."""

    def test_borda_against_plurality_at_example(self):
        """Test that Borda is outvoted by plurality at the five-voter profile."""
        profile = example_profile()
        assert not self_selection_at(borda_tb(4), profile, RuleSlotSet((1, 0)))
        assert self_selection_at(plurality_tb(1), profile, RuleSlotSet((0, 1)))

    def test_compatible_choices(self):
        """Test the elected slot at the unique compatible profile."""
        choices = compatible_choices(
            borda_tb(4), example_profile(), RuleSlotSet((1, 0))
        )
        assert len(choices) == 1
        assert choices[0][1] == 1

    def test_same_outcome_fast_path(self):
        """Test that equal outcomes pass with or without the fast path."""
        slots = RuleSlotSet((1, 1))
        rule = borda_tb(4)
        assert self_selection_at(rule, example_profile(), slots)
        assert self_selection_at(rule, example_profile(), slots, fast_path=False)

    @pytest.mark.parametrize(
        "universe", [SMALL, SMALL_CONDORCET], ids=["unrestricted", "condorcet"]
    )
    def test_same_outcome_rival_everywhere(self, universe):
        """Test that a rival with the rule's own outcome never defeats it."""
        rules = catalog(universe) + [random_neutral_rule(4, universe)]
        for rule in rules:
            for profile in enumerate_universe(universe):
                choice = rule.choose(profile)
                slots = RuleSlotSet((choice, choice))
                assert self_selection_at(rule, profile, slots, fast_path=False), (
                    rule.name,
                    str(profile),
                )

    def test_empty_compatible_set(self):
        """Test a rule whose induced preferences split evenly between two voters."""
        rule = VotingRule(
            name="second",
            domain_kind=DomainKind.CONDORCET,
            evaluator=lambda profile: 1,
        )
        profile = make_profile(
            [["a1", "a2", "a3"], ["a1", "a3", "a2"]], AlternativeSet.canonical(3)
        )
        slots = RuleSlotSet((1, 2))
        assert compatible_choices(rule, profile, slots) == []
        assert not self_selection_at(rule, profile, slots)
        assert self_selection_at(rule, profile, slots, vacuous_pass=True)


class TestBinaryOracle:
    """Tests for the explicit-rival oracle."""

    @given(profiles(max_tau=3))
    @settings(max_examples=60)
    def test_oracle_agrees_with_slot_check(self, profile):
        """Test that outcome sweeping matches an explicit rival rule."""
        rule = plurality_tb(1)
        rival = dictatorship(2)
        slots = RuleSlotSet((rule.choose(profile), rival.choose(profile)))
        assert binary_ss_oracle(rule, profile, rival) == self_selection_at(
            rule, profile, slots
        )

    @given(
        st.integers(0, 10_000),
        st.integers(1, 10_000),
        profiles(min_voters=3, max_voters=3, max_tau=3),
    )
    @settings(max_examples=100, deadline=None)
    def test_oracle_agrees_for_sampled_rules(self, seed, offset, profile):
        """Test the slot check against an explicit sampled rival table rule."""
        rule = random_neutral_rule(seed, SMALL)
        rival = random_neutral_rule(seed + offset, SMALL)
        slots = RuleSlotSet((rule.choose(profile), rival.choose(profile)))
        assert binary_ss_oracle(rule, profile, rival) == self_selection_at(
            rule, profile, slots
        )

    def test_oracle_at_example(self):
        """Test the oracle on the plurality/Borda example."""
        profile = example_profile()
        assert not binary_ss_oracle(borda_tb(4), profile, plurality_tb(1))
        assert binary_ss_oracle(plurality_tb(1), profile, borda_tb(4))

    def test_rival_must_differ(self):
        """Test that a rule cannot be its own rival."""
        rule = plurality_tb(1)
        with pytest.raises(PreconditionError):
            binary_ss_oracle(rule, example_profile(), plurality_tb(1))


class TestCheckers:
    """Tests for check_binary_ss and check_universal_ss."""

    def test_dictatorship_is_binary_self_selective(self):
        """Test that a dictatorship always elects itself."""
        verdict = check_binary_ss(dictatorship(2), SMALL)
        assert verdict.holds
        assert verdict.axiom == BINARY_SS
        assert verdict.cases_checked == 1 + 8 * 2 + 216 * 3

    def test_same_outcome_rivals_can_be_skipped(self):
        """Test the case count without rivals agreeing with the rule."""
        verdict = check_binary_ss(dictatorship(2), SMALL, include_same_outcome=False)
        assert verdict.holds
        assert verdict.cases_checked == 8 + 216 * 2

    def test_borda_is_not_binary_self_selective(self):
        """Test the witness of Borda's failure."""
        verdict = check_binary_ss(borda_tb(3), SMALL)
        assert not verdict.holds
        witness = verdict.witness
        assert witness.kind == SSWitnessKind.NO_SELF_SELECTION
        assert witness.compatible
        assert all(choice.chosen != "sigma" for choice in witness.compatible)
        assert len(witness.rival_outcomes) == 1
        assert len(witness.induced) == SMALL.n
        profile = parse_profile(witness.profile_text)
        assert profile.alt_set.label(borda_tb(3).choose(profile)) == (
            witness.rule_choice
        )

    def test_universal_dictatorship(self):
        """Test universal self-selectivity against up to three rules."""
        verdict = check_universal_ss(dictatorship(2), SMALL, 3)
        assert verdict.holds
        assert verdict.axiom == UNIVERSAL_SS
        assert verdict.k == 3
        size3_cases = 1 + 8 * 4 + 216 * 9
        assert verdict.cases_checked == 1 + 8 * 2 + 216 * 3 + size3_cases

    def test_universal_reproduces_binary_witness(self):
        """Test that the size-2 pass finds the binary witness first."""
        binary = check_binary_ss(borda_tb(3), SMALL)
        universal = check_universal_ss(borda_tb(3), SMALL, 3)
        assert not universal.holds
        assert universal.witness == binary.witness
        assert universal.cases_checked == binary.cases_checked

    @pytest.mark.parametrize("k", [1, 4])
    def test_universal_k_range(self, k):
        """Test that k must lie in 2..tau_max."""
        with pytest.raises(PreconditionError):
            check_universal_ss(dictatorship(1), SMALL, k)

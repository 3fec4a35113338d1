"""
Tests for the Axiom Checkers.

These tests verify the per-profile violation finders, the exhaustive
sweeps and their witnesses on small universes.
"""

import pytest

from selfselect.core.axioms import (
    Axiom,
    PreconditionError,
    anonymity_violation_at,
    axiom_profile,
    check_anonymity,
    check_dictatorship,
    check_iia,
    check_neutrality,
    check_pairwise_consistency,
    check_pareto,
    check_sigma2,
    check_unanimity,
    find_disagreement,
    iia_violation_at,
    pairwise_violation_at,
    pareto_violation_at,
    sigma2_violation_at,
    unanimity_violation_at,
)
from selfselect.core.profile_format import parse_profile
from selfselect.core.profiles import AlternativeSet, make_profile
from selfselect.core.rules import (
    VotingRule,
    borda_tb,
    catalog,
    condorcet_rule,
    dictatorship,
    plurality_tb,
    random_neutral_rule,
)
from selfselect.core.theorems import example_profile
from selfselect.models.universe import DomainKind, Universe

SMALL = Universe(n=3, tau_max=3)
SMALL_CONDORCET = SMALL.with_domain(DomainKind.CONDORCET)
XY = AlternativeSet(("x", "y"))
XYZ = AlternativeSet(("x", "y", "z"))


def bottom_rule() -> VotingRule:
    """Picks voter 1's last alternative."""
    return VotingRule(
        name="bottom",
        domain_kind=DomainKind.UNRESTRICTED,
        evaluator=lambda profile: profile.rankings[0][-1],
    )


def first_label_rule() -> VotingRule:
    """Always picks the first alternative of the set."""
    return VotingRule(
        name="first",
        domain_kind=DomainKind.UNRESTRICTED,
        evaluator=lambda profile: 0,
    )


class TestViolationFinders:
    """Tests for the per-profile entry points."""

    def test_unanimity_violation(self):
        """Test the witness of a rule ignoring a common top."""
        profile = make_profile([["x", "y", "z"]] * 3, XYZ)
        witness = unanimity_violation_at(bottom_rule(), profile)
        assert witness is not None
        assert witness.kind == Axiom.UNANIMITY.value
        assert witness.outputs == {"sigma(P)": "z", "common top": "x"}
        assert unanimity_violation_at(dictatorship(1), profile) is None

    def test_no_common_top_is_no_violation(self):
        """Test that profiles without a common top never violate unanimity."""
        assert unanimity_violation_at(bottom_rule(), example_profile()) is None

    def test_anonymity_violation(self):
        """Test the permutation reported for a dictatorship."""
        profile = make_profile([["x", "y"], ["y", "x"], ["x", "y"]], XY)
        witness = anonymity_violation_at(dictatorship(1), profile)
        assert witness is not None
        assert witness.voter_permutation == [2, 1, 3]
        assert witness.outputs == {"sigma(P)": "x", "sigma(piP)": "y"}
        assert parse_profile(witness.related_profile_text).labelled_rankings() == [
            ["y", "x"],
            ["x", "y"],
            ["x", "y"],
        ]

    def test_iia_violation_of_borda_at_example(self):
        """Test that removing z and w turns Borda's y into x."""
        witness = iia_violation_at(borda_tb(4), example_profile())
        assert witness is not None
        assert witness.kind == Axiom.IIA.value
        assert witness.removed == ["z", "w"]
        assert witness.outputs == {"sigma(P)": "y", "sigma(P|{x,y})": "x"}
        restricted = parse_profile(witness.related_profile_text)
        assert restricted.alt_set.labels == ("x", "y")

    def test_pairwise_violation_of_borda_at_example(self):
        """Test that Borda's winner loses the pair {x, y}."""
        witness = pairwise_violation_at(borda_tb(4), example_profile())
        assert witness is not None
        assert witness.kind == Axiom.PAIRWISE_CONSISTENCY.value
        assert witness.removed == ["z", "w"]

    def test_pareto_violation(self):
        """Test that the dominating alternative is reported."""
        profile = make_profile([["x", "y", "z"]] * 3, XYZ)
        witness = pareto_violation_at(bottom_rule(), profile)
        assert witness is not None
        assert witness.outputs["dominated by"] == "x"
        assert pareto_violation_at(plurality_tb(1), profile) is None

    def test_sigma2_violation(self):
        """Test a dictator outvoted by the majority on two alternatives."""
        profile = make_profile([["x", "y"], ["y", "x"], ["y", "x"]], XY)
        witness = sigma2_violation_at(dictatorship(1), profile)
        assert witness is not None
        assert witness.outputs == {"sigma(P)": "x", "majority": "y"}
        assert sigma2_violation_at(plurality_tb(1), profile) is None

    def test_sigma2_ignores_other_sizes(self):
        """Test that only two-alternative profiles are judged."""
        assert sigma2_violation_at(dictatorship(1), example_profile()) is None

    def test_sigma2_even_split_must_not_pick_majority(self):
        """Test that an even split has no majority to agree with."""
        profile = make_profile([["x", "y"], ["y", "x"]], XY)
        witness = sigma2_violation_at(dictatorship(1), profile)
        assert witness is not None
        assert witness.outputs["majority"] == "none"


class TestExhaustiveCheckers:
    """Tests for the universe sweeps."""

    def test_dictatorship_axioms(self):
        """Test the axiom profile of a dictatorship."""
        rule = dictatorship(1, SMALL.n)
        assert check_unanimity(rule, SMALL).holds
        assert check_neutrality(rule, SMALL).holds
        assert check_iia(rule, SMALL).holds
        assert check_pareto(rule, SMALL).holds
        assert check_pairwise_consistency(rule, SMALL).holds
        assert not check_sigma2(rule, SMALL).holds

    def test_anonymity_witness_is_first_in_enumeration_order(self):
        """Test the first anonymity counterexample of dict:1."""
        verdict = check_anonymity(dictatorship(1), SMALL)
        assert not verdict.holds
        assert verdict.profiles_checked == 4
        assert verdict.witness.voter_permutation == [2, 1, 3]

    def test_full_group_anonymity(self):
        """Test that the full voter group finds a violation as well."""
        verdict = check_anonymity(dictatorship(1), SMALL, full_group=True)
        assert not verdict.holds
        assert verdict.witness.voter_permutation is not None

    def test_neutrality_violation(self):
        """Test that a rule favouring the first label is not neutral."""
        verdict = check_neutrality(first_label_rule(), Universe(n=2, tau_max=2))
        assert not verdict.holds
        assert verdict.profiles_checked == 2
        assert verdict.witness.relabeling == {"a1": "a2", "a2": "a1"}
        assert verdict.witness.outputs == {"mu(sigma(P))": "a2", "sigma(muP)": "a1"}

    def test_plurality_axioms(self):
        """Test the axiom profile of plurality with voter 1 breaking ties."""
        verdicts = axiom_profile(plurality_tb(1), SMALL)
        holding = {name for name, verdict in verdicts.items() if verdict.holds}
        assert holding == {
            Axiom.UNANIMITY.value,
            Axiom.NEUTRALITY.value,
            Axiom.PARETO.value,
            Axiom.SIGMA2.value,
        }

    def test_condorcet_rule_axioms(self):
        """Test that the Condorcet rule satisfies every axiom on its domain."""
        verdicts = axiom_profile(condorcet_rule(), SMALL_CONDORCET)
        assert list(verdicts) == [axiom.value for axiom in Axiom]
        assert all(verdict.holds for verdict in verdicts.values())

    def test_axiom_profile_without_two_alternatives(self):
        """Test that Σ₂ is left out when size 2 is not enumerated."""
        universe = Universe(n=3, tau_min=3, tau_max=3)
        verdicts = axiom_profile(dictatorship(1), universe)
        assert Axiom.SIGMA2.value not in verdicts

    def test_sigma2_precondition(self):
        """Test that Σ₂ needs two-alternative profiles."""
        with pytest.raises(PreconditionError):
            check_sigma2(dictatorship(1), Universe(n=3, tau_min=3, tau_max=3))

    def test_verdicts_are_stamped(self):
        """Test that verdicts carry the rule and universe."""
        verdict = check_unanimity(borda_tb(3), SMALL)
        assert verdict.rule == "borda:3"
        assert verdict.universe == SMALL
        assert verdict.holds
        assert verdict.witness is None
        assert verdict.profiles_checked == 1 + 8 + 216


class TestDictatorshipSearch:
    """Tests for check_dictatorship and find_disagreement."""

    @pytest.mark.parametrize("i", [1, 2, 3])
    def test_dictators_are_found(self, i):
        """Test that every dictatorship is recognised."""
        assert check_dictatorship(dictatorship(i), SMALL) == i

    def test_plurality_is_not_dictatorial(self):
        """Test that plurality has no dictator."""
        assert check_dictatorship(plurality_tb(1), SMALL) is None

    def test_find_disagreement(self):
        """Test the first profile where two rules differ."""
        profile = find_disagreement(dictatorship(1), dictatorship(2), SMALL)
        assert profile is not None
        assert profile.rankings == ((0, 1), (1, 0), (0, 1))
        assert find_disagreement(dictatorship(1), dictatorship(1), SMALL) is None


def symmetry_rules(universe: Universe) -> list[VotingRule]:
    """Catalog rules, seeded samples and a non-neutral rule on a universe."""
    rules = catalog(universe)
    rules += [random_neutral_rule(seed, universe) for seed in range(3)]
    if universe.domain_kind == DomainKind.CONDORCET:
        rules.append(
            random_neutral_rule(0, universe, unanimous=True, anonymous=True)
        )
    rules.append(first_label_rule())
    return rules


class TestGeneratorSufficiency:
    """Tests that adjacent transpositions decide the symmetry axioms."""

    @pytest.mark.parametrize(
        "universe", [SMALL, SMALL_CONDORCET], ids=["unrestricted", "condorcet"]
    )
    def test_anonymity_verdicts_match_full_group(self, universe):
        """Test anonymity with adjacent swaps against every voter permutation."""
        for rule in symmetry_rules(universe):
            adjacent = check_anonymity(rule, universe)
            full = check_anonymity(rule, universe, full_group=True)
            assert adjacent.holds == full.holds, rule.name

    @pytest.mark.parametrize(
        "universe", [SMALL, SMALL_CONDORCET], ids=["unrestricted", "condorcet"]
    )
    def test_neutrality_verdicts_match_full_group(self, universe):
        """Test neutrality with adjacent swaps against every relabeling."""
        for rule in symmetry_rules(universe):
            adjacent = check_neutrality(rule, universe)
            full = check_neutrality(rule, universe, full_group=True)
            assert adjacent.holds == full.holds, rule.name

    def test_catalog_anonymity_on_condorcet_domain(self):
        """Test that both groups agree the Condorcet rule is anonymous."""
        rule = condorcet_rule()
        assert check_anonymity(rule, SMALL_CONDORCET).holds
        assert check_anonymity(rule, SMALL_CONDORCET, full_group=True).holds


class TestScoringRuleNeutrality:
    """Tests for plurality and Borda neutrality with five voters."""

    FIVE = Universe(n=5, tau_max=3)

    @pytest.mark.parametrize(
        "rule",
        [plurality_tb(1), plurality_tb(3), borda_tb(4), borda_tb(5)],
        ids=lambda rule: rule.name,
    )
    def test_neutral_with_five_voters(self, rule):
        """Test that tie-broken scoring rules commute with relabeling."""
        assert check_neutrality(rule, self.FIVE).holds

"""
Tests for Preference Profiles.

These tests verify the profile data model, the relabeling, voter
permutation, restriction and transport actions, enumeration of universes,
canonical representatives and the pairwise majority machinery.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from selfselect.core.profiles import (
    AlternativeSet,
    ProfileError,
    StrictProfile,
    WeakProfile,
    canonical_representative,
    common_top,
    compose,
    condorcet_winner,
    enumerate_profiles,
    enumerate_universe,
    identity,
    invert,
    is_admissible,
    linear_orders,
    make_profile,
    permutation_from_labels,
    permute_voters,
    profile_from_key,
    profile_key,
    relabel,
    relabeling_orbit,
    restrict,
    tops,
    transport,
)
from selfselect.core.theorems import example_profile, second_example_profile
from selfselect.models.universe import DomainKind, Universe
from tests.strategies import profiles, profiles_with_relabeling, rankings

XYZ = AlternativeSet(("x", "y", "z"))


def cyclic_profile() -> StrictProfile:
    """Three voters with a majority cycle x > y > z > x."""
    return make_profile([["x", "y", "z"], ["y", "z", "x"], ["z", "x", "y"]], XYZ)


class TestPermutations:
    """Tests for the permutation helpers."""

    def test_linear_orders_are_lexicographic(self):
        """Test that linear orders come in lexicographic order."""
        orders = linear_orders(3)
        assert len(orders) == 6
        assert orders[0] == (0, 1, 2)
        assert orders[-1] == (2, 1, 0)
        assert list(orders) == sorted(orders)

    @given(st.integers(1, 5).flatmap(lambda n: st.tuples(rankings(n), rankings(n))))
    def test_inverse_of_composition(self, pair):
        """Test (p∘q)^-1 = q^-1∘p^-1."""
        p, q = pair
        assert invert(compose(p, q)) == compose(invert(q), invert(p))
        assert compose(p, invert(p)) == identity(len(p))

    def test_permutation_from_labels_fixes_unmapped(self):
        """Test that labels missing from the mapping stay fixed."""
        assert permutation_from_labels(XYZ, {"x": "y", "y": "x"}) == (1, 0, 2)

    def test_permutation_from_labels_rejects_non_bijection(self):
        """Test that a non-injective mapping is rejected."""
        with pytest.raises(ProfileError):
            permutation_from_labels(XYZ, {"x": "y"})


class TestProfileConstruction:
    """Tests for building and validating profiles."""

    def test_make_profile(self):
        """Test building a profile from labelled rankings."""
        profile = make_profile([["x", "y", "z"], ["z", "y", "x"]], XYZ)
        assert profile.n == 2
        assert profile.tau == 3
        assert profile.rankings == ((0, 1, 2), (2, 1, 0))
        assert profile.prefers(1, 2, 0)
        assert profile.top(1) == 2

    def test_make_profile_needs_two_voters(self):
        """Test that a single voter is rejected."""
        with pytest.raises(ProfileError, match="at least two voters"):
            make_profile([["x", "y", "z"]], XYZ)

    @pytest.mark.parametrize(
        "row",
        [["x", "x", "z"], ["x", "y"], ["x", "y", "q"]],
        ids=["duplicate", "missing", "unknown"],
    )
    def test_make_profile_rejects_bad_rankings(self, row):
        """Test that duplicate, missing and unknown alternatives are rejected."""
        with pytest.raises(ProfileError):
            make_profile([["x", "y", "z"], row], XYZ)

    @pytest.mark.parametrize("labels", [(), ("x", "x"), ("x y",), ("a>b",)])
    def test_alternative_set_validation(self, labels):
        """Test that empty, duplicate and unprintable label sets are rejected."""
        with pytest.raises(ProfileError):
            AlternativeSet(labels)

    def test_canonical_alternative_set(self):
        """Test the canonical labels a1..aN."""
        assert AlternativeSet.canonical(3).labels == ("a1", "a2", "a3")
        with pytest.raises(ProfileError):
            AlternativeSet.canonical(0)

    def test_str_renders_rankings(self):
        """Test the one-line rendering used in log and error messages."""
        assert str(cyclic_profile()) == "x>y>z | y>z>x | z>x>y"

    def test_weak_profile_rejects_overlapping_classes(self):
        """Test that indifference classes must partition the alternatives."""
        with pytest.raises(ProfileError):
            WeakProfile(XYZ, ((frozenset({0, 1}), frozenset({1, 2})),))
        with pytest.raises(ProfileError):
            WeakProfile(XYZ, ((frozenset({0}), frozenset({1})),))

    def test_weak_profile_preferences(self):
        """Test weak preference queries."""
        weak = WeakProfile(XYZ, ((frozenset({0, 2}), frozenset({1})),))
        assert weak.weakly_prefers(0, 0, 2)
        assert weak.weakly_prefers(0, 2, 0)
        assert not weak.weakly_prefers(0, 1, 0)
        assert weak.labelled_orders() == [[["x", "z"], ["y"]]]


class TestGroupActions:
    """Tests for relabeling, voter permutation, restriction and transport."""

    def test_relabel(self):
        """Test that relabeling maps every ranking through mu."""
        profile = make_profile([["x", "y", "z"], ["z", "y", "x"]], XYZ)
        relabeled = relabel(profile, (1, 0, 2))
        assert relabeled.rankings == ((1, 0, 2), (2, 0, 1))

    def test_relabel_rejects_non_bijection(self):
        """Test that relabeling needs a bijection."""
        with pytest.raises(ProfileError):
            relabel(cyclic_profile(), (0, 0, 1))

    def test_permute_voters(self):
        """Test that voter i of the result holds ranking P_pi(i)."""
        profile = cyclic_profile()
        permuted = permute_voters(profile, (2, 0, 1))
        assert permuted.rankings == (
            profile.rankings[2],
            profile.rankings[0],
            profile.rankings[1],
        )

    def test_restrict_example_to_xy(self):
        """Test restricting the five-voter example to {x, y}."""
        restricted = restrict(example_profile(), ["x", "y"])
        assert restricted.alt_set.labels == ("x", "y")
        assert restricted.labelled_rankings() == [["x", "y"]] * 3 + [["y", "x"]] * 2

    def test_restrict_keeps_label_order(self):
        """Test that restriction keeps the alternatives' original order."""
        restricted = restrict(example_profile(), ["w", "y"])
        assert restricted.alt_set.labels == ("y", "w")

    @pytest.mark.parametrize("keep", [[], ["q"]])
    def test_restrict_rejects_bad_sets(self, keep):
        """Test that empty and unknown restrictions are rejected."""
        with pytest.raises(ProfileError):
            restrict(example_profile(), keep)

    def test_transport_to_canonical_set(self):
        """Test transporting onto a1..aN through a bijection."""
        profile = make_profile([["x", "y", "z"], ["z", "y", "x"]], XYZ)
        moved = transport(profile, (2, 0, 1))
        assert moved.alt_set.labels == ("a1", "a2", "a3")
        assert moved.labelled_rankings() == [["a3", "a1", "a2"], ["a2", "a1", "a3"]]

    def test_transport_rejects_size_mismatch(self):
        """Test that the target must have as many alternatives."""
        with pytest.raises(ProfileError):
            transport(cyclic_profile(), (0, 1, 2), AlternativeSet.canonical(2))

    @given(profiles_with_relabeling())
    def test_relabeling_composes(self, case):
        """Test that relabeling by mu then its inverse is the identity."""
        profile, mu = case
        assert relabel(relabel(profile, mu), invert(mu)) == profile


class TestMajority:
    """Tests for the pairwise majority machinery."""

    def test_example_tally(self):
        """Test pairwise counts of the five-voter example."""
        tally = example_profile().tally
        assert tally.count(0, 1) == 3
        assert tally.count(1, 0) == 2
        assert tally.count(1, 2) == 5
        assert tally.majority(0, 3)

    def test_condorcet_winner(self):
        """Test that x beats every rival in the five-voter example."""
        assert condorcet_winner(example_profile()) == 0
        assert condorcet_winner(second_example_profile()) == 1

    def test_cycle_has_no_condorcet_winner(self):
        """Test that a majority cycle has no strong Condorcet winner."""
        profile = cyclic_profile()
        assert condorcet_winner(profile) is None
        assert not is_admissible(profile, DomainKind.CONDORCET)
        assert is_admissible(profile, DomainKind.UNRESTRICTED)

    def test_tie_has_no_condorcet_winner(self):
        """Test that an even split has no strict majority."""
        profile = make_profile([["x", "y"], ["y", "x"]], AlternativeSet(("x", "y")))
        assert condorcet_winner(profile) is None

    def test_tops(self):
        """Test top alternatives and the common top."""
        assert tops(example_profile()) == (0, 0, 0, 1, 1)
        assert common_top(example_profile()) is None
        unanimous = make_profile([["y", "x", "z"], ["y", "z", "x"]], XYZ)
        assert common_top(unanimous) == 1


class TestEnumeration:
    """Tests for universe enumeration."""

    def test_unrestricted_counts(self):
        """Test that every profile is enumerated once."""
        universe = Universe(n=3, tau_max=3)
        assert len(list(enumerate_profiles(universe, 3))) == 216
        assert len(list(enumerate_universe(universe))) == 1 + 8 + 216

    def test_condorcet_domain_drops_cycles(self):
        """Test that the twelve cyclic profiles are left out."""
        universe = Universe(n=3, tau_max=3, domain_kind=DomainKind.CONDORCET)
        assert len(list(enumerate_profiles(universe, 3))) == 204

    def test_enumeration_order(self):
        """Test that voter 1 is the most significant position."""
        universe = Universe(n=2, tau_max=2)
        listed = [p.rankings for p in enumerate_profiles(universe, 2)]
        assert listed == [
            ((0, 1), (0, 1)),
            ((0, 1), (1, 0)),
            ((1, 0), (0, 1)),
            ((1, 0), (1, 0)),
        ]

    def test_enumeration_outside_range(self):
        """Test that sizes outside the universe are rejected."""
        with pytest.raises(ProfileError):
            list(enumerate_profiles(Universe(n=2, tau_min=2, tau_max=3), 1))


class TestCanonicalization:
    """Tests for orbit representatives and profile keys."""

    @given(profiles_with_relabeling(max_tau=4))
    def test_representative_is_orbit_invariant(self, case):
        """Test that every member of an orbit has the same representative."""
        profile, mu = case
        rep, rep_mu = canonical_representative(profile)
        assert rep.rankings[0] == identity(profile.tau)
        assert relabel(profile, rep_mu) == rep
        assert canonical_representative(relabel(profile, mu))[0] == rep

    def test_relabeling_orbit_is_free(self):
        """Test that orbits have tau! members."""
        assert len(relabeling_orbit(cyclic_profile())) == 6

    def test_profile_key(self):
        """Test the compact key format."""
        profile = make_profile([["x", "y", "z"], ["z", "y", "x"]], XYZ)
        assert profile_key(profile) == "3:012/210"

    @given(profiles())
    def test_key_rebuilds_rankings(self, profile):
        """Test that a key rebuilds the rankings on the canonical set."""
        rebuilt = profile_from_key(profile_key(profile))
        assert rebuilt.rankings == profile.rankings

    @pytest.mark.parametrize("key", ["3:01/210", "x:012/012", "3:012", "0:/"])
    def test_malformed_keys(self, key):
        """Test that malformed keys are rejected."""
        with pytest.raises(ProfileError):
            profile_from_key(key)


def condorcet_winner_by_double_loop(profile: StrictProfile) -> int | None:
    """Reference Condorcet winner from raw pairwise counts."""
    for x in range(profile.tau):
        beats_all = True
        for y in range(profile.tau):
            if x == y:
                continue
            wins = sum(1 for r in profile.rankings if r.index(x) < r.index(y))
            if 2 * wins <= profile.n:
                beats_all = False
                break
        if beats_all:
            return x
    return None


class TestStructuralInvariants:
    """Exhaustive and property-based checks of the profile invariants."""

    @given(profiles())
    def test_pairwise_counts_sum_to_n(self, profile):
        """Test n_P(x,y) + n_P(y,x) = n for distinct x, y."""
        tally = profile.tally
        for x in range(profile.tau):
            for y in range(profile.tau):
                if x != y:
                    assert tally.count(x, y) + tally.count(y, x) == profile.n

    def test_condorcet_winner_matches_double_loop(self):
        """Test condorcet_winner on every profile with three voters."""
        for profile in enumerate_universe(Universe(n=3, tau_max=3)):
            assert condorcet_winner(profile) == condorcet_winner_by_double_loop(
                profile
            )

    def test_relabeling_acts_freely(self):
        """Test that every orbit has tau! members with two voters."""
        sizes = {1: 1, 2: 2, 3: 6}
        for profile in enumerate_universe(Universe(n=2, tau_max=3)):
            assert len(relabeling_orbit(profile)) == sizes[profile.tau]

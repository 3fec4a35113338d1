"""
Selfselect Verifier - Preference Profiles.

This module implements the preference profile data model, the group
actions used by every checker (alternative relabeling, voter permutation
and restriction), bijective transport onto canonical alternative sets,
profile enumeration and the pairwise majority machinery.

Alternatives are handled as indices ``0..tau-1`` into an AlternativeSet;
labels only matter at I/O boundaries.
"""

import itertools
import logging
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache

from selfselect.models.universe import DomainKind, Universe

# A bijection on indices: perm[i] is the image of i.
Permutation = tuple[int, ...]
# One voter's linear order, most preferred first.
Ranking = tuple[int, ...]

KEY_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"

logger = logging.getLogger("profiles")


class ProfileError(ValueError):
    """Exception raised for malformed profiles, bijections or restrictions."""


@lru_cache(maxsize=None)
def linear_orders(size: int) -> tuple[Ranking, ...]:
    """
    All linear orders over ``size`` alternatives in lexicographic order.

    Args:
        size: Number of alternatives.

    Returns:
        Tuple of rankings, lexicographically sorted.
    """
    return tuple(itertools.permutations(range(size)))


def identity(size: int) -> Permutation:
    """Return the identity permutation on ``size`` points."""
    return tuple(range(size))


def adjacent_transpositions(size: int) -> list[Permutation]:
    """Return the generators (i i+1) of the symmetric group on ``size`` points."""
    generators = []
    for i in range(size - 1):
        perm = list(range(size))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        generators.append(tuple(perm))
    return generators


def compose(second: Permutation, first: Permutation) -> Permutation:
    """Return ``second ∘ first`` (apply ``first``, then ``second``)."""
    return tuple(second[i] for i in first)


def invert(perm: Permutation) -> Permutation:
    """Return the inverse permutation."""
    inverse = [0] * len(perm)
    for i, image in enumerate(perm):
        inverse[image] = i
    return tuple(inverse)


def validate_permutation(perm: Sequence[int], size: int, what: str) -> Permutation:
    """
    Check that ``perm`` is a bijection on ``0..size-1``.

    Args:
        perm: Candidate permutation.
        size: Size of the point set.
        what: Name of the point set, used in the error message.

    Returns:
        The permutation as a tuple.

    Raises:
        ProfileError: If ``perm`` is not a bijection on the point set.
    """
    result = tuple(perm)
    if len(result) != size or sorted(result) != list(range(size)):
        raise ProfileError(f"{list(result)} is not a bijection on the {what}")
    return result


@lru_cache(maxsize=None)
def _canonical_labels(size: int) -> tuple[str, ...]:
    return tuple(f"a{i + 1}" for i in range(size))


@dataclass(frozen=True)
class AlternativeSet:
    """
    Finite, labelled set of alternatives.

    Attributes:
        labels: Distinct printable names, one per alternative index.
    """

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.labels:
            raise ProfileError("An alternative set needs at least one alternative")
        if len(set(self.labels)) != len(self.labels):
            raise ProfileError(f"Duplicate alternative labels in {list(self.labels)}")
        for label in self.labels:
            if not label or any(ch.isspace() for ch in label) or ">" in label:
                raise ProfileError(f"Invalid alternative label: {label!r}")

    @classmethod
    def canonical(cls, size: int) -> "AlternativeSet":
        """Return the canonical set ``a1..a<size>``."""
        if size < 1:
            raise ProfileError(f"Alternative set size must be positive, got {size}")
        return cls(_canonical_labels(size))

    @property
    def size(self) -> int:
        """Number of alternatives."""
        return len(self.labels)

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index(self, label: str) -> int:
        """
        Get the index of a label.

        Raises:
            ProfileError: If the label is unknown.
        """
        try:
            return self._positions[label]
        except KeyError:
            raise ProfileError(
                f"Unknown alternative {label!r}; known: {list(self.labels)}"
            ) from None

    def label(self, index: int) -> str:
        """Get the label of an alternative index."""
        return self.labels[index]


@dataclass(frozen=True)
class StrictProfile:
    """
    One strict linear order per voter over a finite alternative set.

    Rankings are trusted to be permutations of the alternative indices;
    build profiles from untrusted input with ``make_profile``.

    Attributes:
        alt_set: The alternatives.
        rankings: Per voter, alternative indices from most to least preferred.
    """

    alt_set: AlternativeSet
    rankings: tuple[Ranking, ...]

    @property
    def n(self) -> int:
        """Number of voters."""
        return len(self.rankings)

    @property
    def tau(self) -> int:
        """Number of alternatives."""
        return self.alt_set.size

    @cached_property
    def positions(self) -> tuple[tuple[int, ...], ...]:
        """Per voter, the rank position of every alternative (0 is the top)."""
        result = []
        for ranking in self.rankings:
            position = [0] * len(ranking)
            for place, alternative in enumerate(ranking):
                position[alternative] = place
            result.append(tuple(position))
        return tuple(result)

    @cached_property
    def tally(self) -> "PairwiseTally":
        """Pairwise majority tally of the profile."""
        return pairwise_tally(self)

    def prefers(self, voter: int, x: int, y: int) -> bool:
        """Whether ``voter`` strictly prefers ``x`` to ``y``."""
        position = self.positions[voter]
        return position[x] < position[y]

    def top(self, voter: int) -> int:
        """Top-ranked alternative of ``voter``."""
        return self.rankings[voter][0]

    def labelled_rankings(self) -> list[list[str]]:
        """Rankings with labels instead of indices."""
        return [[self.alt_set.label(a) for a in ranking] for ranking in self.rankings]

    def __str__(self) -> str:
        return " | ".join(">".join(row) for row in self.labelled_rankings())


@dataclass(frozen=True)
class WeakProfile:
    """
    One ordered partition into indifference classes per voter.

    Attributes:
        alt_set: The alternatives being ordered.
        orders: Per voter, indifference classes from best to worst.
    """

    alt_set: AlternativeSet
    orders: tuple[tuple[frozenset[int], ...], ...]

    def __post_init__(self) -> None:
        everything = set(range(self.alt_set.size))
        for voter, classes in enumerate(self.orders):
            seen: set[int] = set()
            for block in classes:
                if not block or seen & block:
                    raise ProfileError(
                        f"Voter {voter + 1} has empty or overlapping classes"
                    )
                seen |= block
            if seen != everything:
                raise ProfileError(
                    f"Voter {voter + 1}'s classes do not cover the alternative set"
                )

    @property
    def n(self) -> int:
        """Number of voters."""
        return len(self.orders)

    def weakly_prefers(self, voter: int, x: int, y: int) -> bool:
        """Whether ``voter`` ranks ``x`` at least as high as ``y``."""
        for block in self.orders[voter]:
            if x in block:
                return True
            if y in block:
                return False
        return False

    def labelled_orders(self) -> list[list[list[str]]]:
        """Orders with labels, each class sorted by index."""
        return [
            [[self.alt_set.label(a) for a in sorted(block)] for block in classes]
            for classes in self.orders
        ]


@dataclass(frozen=True)
class PairwiseTally:
    """
    Pairwise majority counts of a strict profile.

    Attributes:
        n: Number of voters.
        counts: ``counts[x][y]`` voters rank ``x`` above ``y``; diagonal unused.
    """

    n: int
    counts: tuple[tuple[int, ...], ...]

    def count(self, x: int, y: int) -> int:
        """Number of voters preferring ``x`` to ``y``."""
        return self.counts[x][y]

    def majority(self, x: int, y: int) -> bool:
        """Whether a strict majority prefers ``x`` to ``y``."""
        return 2 * self.counts[x][y] > self.n


def make_profile(
    rankings: Sequence[Sequence[str]],
    alt_set: AlternativeSet,
) -> StrictProfile:
    """
    Build a validated strict profile from labelled rankings.

    Args:
        rankings: Per voter, labels from most to least preferred.
        alt_set: The alternative set every ranking must cover.

    Returns:
        The validated profile.

    Raises:
        ProfileError: On an empty or single voter list, or a ranking with a
            duplicate, missing or unknown alternative.
    """
    if len(rankings) < 2:
        raise ProfileError(f"A profile needs at least two voters, got {len(rankings)}")

    converted = []
    for voter, row in enumerate(rankings, start=1):
        indices = tuple(alt_set.index(label) for label in row)
        if len(set(indices)) != len(indices):
            raise ProfileError(f"Voter {voter} ranks an alternative twice: {list(row)}")
        if len(indices) != alt_set.size:
            raise ProfileError(
                f"Voter {voter} ranks {len(indices)} of {alt_set.size} alternatives"
            )
        converted.append(indices)
    return StrictProfile(alt_set, tuple(converted))


def permutation_from_labels(
    alt_set: AlternativeSet,
    mapping: Mapping[str, str],
) -> Permutation:
    """
    Convert a label-to-label bijection into an index permutation.

    Labels missing from ``mapping`` are fixed.
    """
    perm = list(range(alt_set.size))
    for source, target in mapping.items():
        perm[alt_set.index(source)] = alt_set.index(target)
    return validate_permutation(perm, alt_set.size, "alternative set")


def relabel(profile: StrictProfile, mu: Sequence[int]) -> StrictProfile:
    """
    Apply an alternative permutation: ``mu(x) muP_i mu(y)`` iff ``x P_i y``.

    Raises:
        ProfileError: If ``mu`` is not a bijection on the alternative set.
    """
    mu = validate_permutation(mu, profile.tau, "alternative set")
    rankings = tuple(tuple(mu[a] for a in ranking) for ranking in profile.rankings)
    return StrictProfile(profile.alt_set, rankings)


def permute_voters(profile: StrictProfile, pi: Sequence[int]) -> StrictProfile:
    """
    Permute voters: voter ``i`` of the result holds ranking ``P_pi(i)``.

    Raises:
        ProfileError: If ``pi`` is not a bijection on the voter set.
    """
    pi = validate_permutation(pi, profile.n, "voter set")
    return StrictProfile(profile.alt_set, tuple(profile.rankings[j] for j in pi))


def restrict_indices(profile: StrictProfile, keep: Iterable[int]) -> StrictProfile:
    """
    Restrict a profile to the alternatives with the given indices.

    Kept alternatives keep their relative order; index ``j`` of the result
    is the ``j``-th smallest kept index of the input.

    Raises:
        ProfileError: If ``keep`` is empty or holds unknown indices.
    """
    kept = sorted(set(keep))
    if not kept:
        raise ProfileError("Cannot restrict a profile to no alternatives")
    if kept[0] < 0 or kept[-1] >= profile.tau:
        raise ProfileError(f"Restriction {kept} leaves the alternative set")

    new_index = {old: new for new, old in enumerate(kept)}
    rankings = tuple(
        tuple(new_index[a] for a in ranking if a in new_index)
        for ranking in profile.rankings
    )
    labels = tuple(profile.alt_set.label(a) for a in kept)
    return StrictProfile(AlternativeSet(labels), rankings)


def restrict(profile: StrictProfile, keep: Iterable[str]) -> StrictProfile:
    """
    Restrict a profile to a nonempty set of alternative labels.

    Raises:
        ProfileError: If ``keep`` is empty or contains unknown labels.
    """
    return restrict_indices(profile, [profile.alt_set.index(label) for label in keep])


def transport(
    profile: StrictProfile,
    beta: Sequence[int],
    target: AlternativeSet | None = None,
) -> StrictProfile:
    """
    Carry a profile over a set X onto another set through a bijection.

    ``a P_i b`` iff ``beta(a) betaP_i beta(b)``. The target defaults to the
    canonical set ``a1..a<tau>``.

    Raises:
        ProfileError: If ``beta`` is not bijective or sizes differ.
    """
    target = target or AlternativeSet.canonical(profile.tau)
    if target.size != profile.tau:
        raise ProfileError(
            f"Cannot transport {profile.tau} alternatives onto {target.size}"
        )
    beta = validate_permutation(beta, profile.tau, "alternative set")
    rankings = tuple(tuple(beta[a] for a in ranking) for ranking in profile.rankings)
    return StrictProfile(target, rankings)


def pairwise_tally(profile: StrictProfile) -> PairwiseTally:
    """Count, for every ordered pair, the voters ranking the first above the second."""
    size = profile.tau
    counts = [[0] * size for _ in range(size)]
    for ranking in profile.rankings:
        for place, x in enumerate(ranking):
            row = counts[x]
            for y in ranking[place + 1 :]:
                row[y] += 1
    return PairwiseTally(profile.n, tuple(tuple(row) for row in counts))


def condorcet_winner(profile: StrictProfile) -> int | None:
    """
    Return the strong Condorcet winner, if any.

    A strong Condorcet winner beats every other alternative by a strict
    majority; there is at most one. With a single alternative it is that
    alternative.
    """
    tally = profile.tally
    for x in range(profile.tau):
        if all(tally.majority(x, y) for y in range(profile.tau) if y != x):
            return x
    return None


def is_admissible(profile: StrictProfile, domain_kind: DomainKind) -> bool:
    """Whether a profile belongs to the given domain."""
    if domain_kind == DomainKind.CONDORCET:
        return condorcet_winner(profile) is not None
    return True


def tops(profile: StrictProfile) -> tuple[int, ...]:
    """Top-ranked alternative of every voter."""
    return tuple(ranking[0] for ranking in profile.rankings)


def common_top(profile: StrictProfile) -> int | None:
    """The unanimously top-ranked alternative, if there is one."""
    first = profile.rankings[0][0]
    if all(ranking[0] == first for ranking in profile.rankings):
        return first
    return None


def enumerate_profiles(universe: Universe, tau: int) -> Iterator[StrictProfile]:
    """
    Yield every admissible profile of the universe at size ``tau`` once.

    Profiles come in a fixed order: voter 1 is the most significant
    position and each voter's rankings run in lexicographic order.

    Raises:
        ProfileError: If ``tau`` is outside the universe's range.
    """
    if tau not in universe.tau_range:
        raise ProfileError(
            f"tau={tau} is outside the universe range "
            f"{universe.tau_min}..{universe.tau_max}"
        )

    alt_set = AlternativeSet.canonical(tau)
    condorcet_only = universe.domain_kind == DomainKind.CONDORCET
    for rankings in itertools.product(linear_orders(tau), repeat=universe.n):
        profile = StrictProfile(alt_set, rankings)
        if condorcet_only and condorcet_winner(profile) is None:
            continue
        yield profile


def enumerate_universe(universe: Universe) -> Iterator[StrictProfile]:
    """Yield every admissible profile at every size of the universe."""
    for tau in universe.tau_range:
        yield from enumerate_profiles(universe, tau)


def canonical_representative(
    profile: StrictProfile,
) -> tuple[StrictProfile, Permutation]:
    """
    Return the lexicographically least relabeling of a profile.

    The least member of the orbit is the one where voter 1 ranks the
    alternatives in index order: that ranking is the smallest possible and,
    the relabeling action being free, exactly one permutation produces it.

    Returns:
        ``(rep, mu)`` with ``relabel(profile, mu) == rep``.
    """
    mu = invert(profile.rankings[0])
    rankings = tuple(tuple(mu[a] for a in ranking) for ranking in profile.rankings)
    return StrictProfile(profile.alt_set, rankings), mu


def relabeling_orbit(profile: StrictProfile) -> set[StrictProfile]:
    """All profiles ``muP`` for ``mu`` ranging over the alternative permutations."""
    return {relabel(profile, mu) for mu in linear_orders(profile.tau)}


def profile_key(profile: StrictProfile) -> str:
    """
    Compact, stable text key of a profile's rankings.

    Format: ``<tau>:<ranking>/<ranking>/...`` with one base-36 digit per
    alternative index.
    """
    if profile.tau > len(KEY_DIGITS):
        raise ProfileError(
            f"Profile keys support at most {len(KEY_DIGITS)} alternatives"
        )
    rows = ("".join(KEY_DIGITS[a] for a in ranking) for ranking in profile.rankings)
    return f"{profile.tau}:" + "/".join(rows)


def profile_from_key(key: str) -> StrictProfile:
    """
    Rebuild a profile over the canonical alternative set from its key.

    Raises:
        ProfileError: If the key is malformed.
    """
    try:
        size_text, body = key.split(":", 1)
        size = int(size_text)
        rankings = tuple(
            tuple(KEY_DIGITS.index(ch) for ch in row) for row in body.split("/")
        )
    except ValueError:
        raise ProfileError(f"Malformed profile key: {key!r}") from None

    if size < 1 or any(sorted(ranking) != list(range(size)) for ranking in rankings):
        raise ProfileError(f"Malformed profile key: {key!r}")
    if len(rankings) < 2:
        raise ProfileError(f"Profile key {key!r} has fewer than two voters")
    return StrictProfile(AlternativeSet.canonical(size), rankings)

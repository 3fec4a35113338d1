"""
Selfselect Verifier - Voting Rules.

This module implements the voting rule abstraction and the rule catalog:
dictatorships, the Condorcet rule, tie-broken plurality and Borda rules,
neutral rules encoded as orbit tables, and seeded samplers of random
neutral rules, with or without IIA.
"""

import itertools
import logging
import random
from collections.abc import Callable, Iterator, Mapping
from dataclasses import dataclass, field, replace
from pathlib import Path

from selfselect.core.profiles import (
    AlternativeSet,
    ProfileError,
    Ranking,
    StrictProfile,
    adjacent_transpositions,
    canonical_representative,
    common_top,
    compose,
    condorcet_winner,
    identity,
    invert,
    is_admissible,
    linear_orders,
    permute_voters,
    profile_from_key,
    profile_key,
    restrict_indices,
)
from selfselect.models.universe import DomainKind, Universe

logger = logging.getLogger("rules")

Evaluator = Callable[[StrictProfile], int]

# Tie-break voters fixed by the plurality/Borda example.
DEFAULT_PLURALITY_TIE_BREAK = 1
DEFAULT_BORDA_TIE_BREAK = 4
# Two-alternative draws tried before an IIA sample gives up.
IIA_SAMPLE_ATTEMPTS = 200


class RuleDomainError(Exception):
    """Exception raised when a rule is evaluated outside its admissible domain."""

    def __init__(self, message: str, rule_name: str, profile: StrictProfile) -> None:
        """
        Initialize RuleDomainError.

        Args:
            message: What went wrong.
            rule_name: Name of the rule being evaluated.
            profile: The offending profile.
        """
        super().__init__(f"{rule_name}: {message} at profile [{profile}]")
        self.rule_name = rule_name
        self.profile = profile


class RuleSpecError(ValueError):
    """Exception raised for an unusable rule specification or table file."""


class RuleConstraintError(ValueError):
    """Exception raised when sampler constraints cannot be met on an orbit."""

    def __init__(self, message: str, orbit: str) -> None:
        """
        Initialize RuleConstraintError.

        Args:
            message: What went wrong.
            orbit: Profile key of the orbit with no admissible value.
        """
        super().__init__(f"{message} (orbit {orbit})")
        self.orbit = orbit


@dataclass(frozen=True, eq=False)
class VotingRule:
    """
    A named, deterministic voting rule.

    Attributes:
        name: Identifier, also the CLI spec for catalog rules.
        domain_kind: Domain of admissible profiles.
        evaluator: Maps an admissible profile to an alternative index.
        tau_max: Largest alternative-set size the rule is defined on, if bounded.
        n: Voter count the rule is bound to, if any.
        min_voters: Smallest voter count the rule can be evaluated at.
    """

    name: str
    domain_kind: DomainKind
    evaluator: Evaluator = field(repr=False)
    tau_max: int | None = None
    n: int | None = None
    min_voters: int = 2

    def admits(self, profile: StrictProfile) -> bool:
        """Whether the profile lies in the rule's admissible domain."""
        if self.tau_max is not None and profile.tau > self.tau_max:
            return False
        if self.n is not None and profile.n != self.n:
            return False
        if profile.n < self.min_voters:
            return False
        return is_admissible(profile, self.domain_kind)

    def choose(self, profile: StrictProfile) -> int:
        """
        Evaluate the rule.

        Args:
            profile: An admissible profile.

        Returns:
            Index of the chosen alternative.

        Raises:
            RuleDomainError: If the profile is outside the rule's domain.
        """
        if self.tau_max is not None and profile.tau > self.tau_max:
            raise RuleDomainError(
                f"undefined beyond tau={self.tau_max}", self.name, profile
            )
        if self.n is not None and profile.n != self.n:
            raise RuleDomainError(f"defined for n={self.n} only", self.name, profile)
        if profile.n < self.min_voters:
            raise RuleDomainError(
                f"needs at least {self.min_voters} voters", self.name, profile
            )
        if not is_admissible(profile, self.domain_kind):
            raise RuleDomainError(
                "profile has no strong Condorcet winner", self.name, profile
            )
        try:
            choice = self.evaluator(profile)
        except LookupError:
            raise RuleDomainError("no orbit entry", self.name, profile) from None
        if not 0 <= choice < profile.tau:
            raise RuleDomainError(
                f"chose {choice}, outside the alternative set", self.name, profile
            )
        return choice

    def restricted_to(self, domain_kind: DomainKind) -> "VotingRule":
        """
        The same rule on a narrower domain.

        Raises:
            RuleSpecError: If the rule is undefined on part of that domain.
        """
        if domain_kind == self.domain_kind:
            return self
        if domain_kind != DomainKind.CONDORCET:
            raise RuleSpecError(
                f"{self.name} is defined on the {self.domain_kind.value} domain only"
            )
        return replace(self, domain_kind=domain_kind)

    def __str__(self) -> str:
        return self.name


def evaluate(rule: VotingRule, profile: StrictProfile) -> int:
    """Evaluate ``rule`` at ``profile`` (alternative index)."""
    return rule.choose(profile)


def evaluate_label(rule: VotingRule, profile: StrictProfile) -> str:
    """Evaluate ``rule`` at ``profile`` and return the chosen label."""
    return profile.alt_set.label(rule.choose(profile))


def _check_voter_index(index: int, what: str, n: int | None) -> None:
    if index < 1 or (n is not None and index > n):
        bound = f"1..{n}" if n is not None else "positive"
        raise RuleSpecError(f"{what} voter index {index} out of range ({bound})")


def dictatorship(i: int, n: int | None = None) -> VotingRule:
    """
    The dictatorship of voter ``i`` (1-based).

    Args:
        i: Dictator.
        n: Optional voter count to validate ``i`` against.

    Raises:
        RuleSpecError: If ``i`` is out of range.
    """
    _check_voter_index(i, "dictator", n)
    voter = i - 1
    return VotingRule(
        name=f"dict:{i}",
        domain_kind=DomainKind.UNRESTRICTED,
        evaluator=lambda profile: profile.rankings[voter][0],
        min_voters=max(2, i),
    )


def condorcet_rule() -> VotingRule:
    """The Condorcet rule on the domain of profiles with a strong Condorcet winner."""
    return VotingRule(
        name="condorcet",
        domain_kind=DomainKind.CONDORCET,
        evaluator=condorcet_winner,  # type: ignore[arg-type]
    )


def plurality_scores(profile: StrictProfile) -> list[int]:
    """Number of first places of every alternative."""
    scores = [0] * profile.tau
    for ranking in profile.rankings:
        scores[ranking[0]] += 1
    return scores


def borda_scores(profile: StrictProfile) -> list[int]:
    """Borda counts with scoring vector ``(tau, tau-1, ..., 1)``."""
    scores = [0] * profile.tau
    for ranking in profile.rankings:
        for place, alternative in enumerate(ranking):
            scores[alternative] += profile.tau - place
    return scores


def _unique_max_or_top(scores: list[int], profile: StrictProfile, voter: int) -> int:
    best = max(scores)
    winners = [a for a, score in enumerate(scores) if score == best]
    if len(winners) == 1:
        return winners[0]
    return profile.rankings[voter][0]


def plurality_tb(
    d: int = DEFAULT_PLURALITY_TIE_BREAK, n: int | None = None
) -> VotingRule:
    """
    Plurality with ties broken by voter ``d``'s top alternative.

    Raises:
        RuleSpecError: If ``d`` is out of range.
    """
    _check_voter_index(d, "tie-break", n)
    voter = d - 1
    return VotingRule(
        name=f"plurality:{d}",
        domain_kind=DomainKind.UNRESTRICTED,
        evaluator=lambda profile: _unique_max_or_top(
            plurality_scores(profile), profile, voter
        ),
        min_voters=max(2, d),
    )


def borda_tb(d: int = DEFAULT_BORDA_TIE_BREAK, n: int | None = None) -> VotingRule:
    """
    Borda count with ties broken by voter ``d``'s top alternative.

    Raises:
        RuleSpecError: If ``d`` is out of range.
    """
    _check_voter_index(d, "tie-break", n)
    voter = d - 1
    return VotingRule(
        name=f"borda:{d}",
        domain_kind=DomainKind.UNRESTRICTED,
        evaluator=lambda profile: _unique_max_or_top(
            borda_scores(profile), profile, voter
        ),
        min_voters=max(2, d),
    )


class OrbitTable:
    """
    Finite encoding of a neutral rule by its values at orbit representatives.

    Keys are the rankings of canonical representatives (voter 1 ranks the
    alternatives in index order); values are alternative indices. A profile
    ``P = mu^-1 rep`` is mapped to ``mu^-1(table[rep])``, which makes every
    table rule neutral by construction.

    Attributes:
        n: Voter count.
        domain_kind: Domain whose orbits are indexed.
        entries: Per size, representative rankings to chosen index.

    Example:
        >>> table = table_from_rule(dictatorship(1), Universe(n=3, tau_max=3))
        >>> rule = table_rule(table, "dict-table")
    """

    def __init__(
        self,
        n: int,
        domain_kind: DomainKind,
        entries: Mapping[int, Mapping[tuple[Ranking, ...], int]],
    ) -> None:
        """
        Initialize the table.

        Args:
            n: Voter count.
            domain_kind: Domain whose orbits are indexed.
            entries: Per size, representative rankings to chosen index.
        """
        self.n = n
        self.domain_kind = domain_kind
        self._entries = {tau: dict(values) for tau, values in entries.items()}

    @property
    def sizes(self) -> list[int]:
        """Alternative-set sizes with entries, ascending."""
        return sorted(self._entries)

    @property
    def tau_max(self) -> int:
        """Largest size with entries."""
        return max(self._entries, default=0)

    def __len__(self) -> int:
        return sum(len(values) for values in self._entries.values())

    def lookup(self, rep: StrictProfile) -> int:
        """
        Value at a canonical representative.

        Raises:
            KeyError: If the orbit has no entry.
        """
        return self._entries[rep.tau][rep.rankings]

    def value_at(self, profile: StrictProfile) -> int:
        """Value at any profile through its orbit representative."""
        rep, mu = canonical_representative(profile)
        return invert(mu)[self.lookup(rep)]

    def with_entry(self, rep: StrictProfile, value: int) -> "OrbitTable":
        """Return a copy with one orbit's value replaced."""
        entries = {tau: dict(values) for tau, values in self._entries.items()}
        entries.setdefault(rep.tau, {})[rep.rankings] = value
        return OrbitTable(self.n, self.domain_kind, entries)

    def with_entries(
        self, tau: int, values: Mapping[tuple[Ranking, ...], int]
    ) -> "OrbitTable":
        """Return a copy with the entries of size ``tau`` replaced."""
        entries = {size: dict(known) for size, known in self._entries.items()}
        entries[tau] = dict(values)
        return OrbitTable(self.n, self.domain_kind, entries)

    def items(self) -> Iterator[tuple[StrictProfile, int]]:
        """Yield ``(representative, value)`` by size, then key order."""
        for tau in self.sizes:
            alt_set = AlternativeSet.canonical(tau)
            for rankings in sorted(self._entries[tau]):
                yield StrictProfile(alt_set, rankings), self._entries[tau][rankings]

    def missing_orbits(self, universe: Universe) -> list[StrictProfile]:
        """Representatives of the universe without an entry."""
        missing = []
        for tau in universe.tau_range:
            known = self._entries.get(tau, {})
            missing.extend(
                rep
                for rep in orbit_representatives(universe, tau)
                if rep.rankings not in known
            )
        return missing


def orbit_representatives(universe: Universe, tau: int) -> list[StrictProfile]:
    """
    Canonical representatives of the admissible relabeling orbits at ``tau``.

    Both domains are closed under relabeling, so the representatives are
    exactly the admissible profiles whose first voter ranks ``a1 > a2 > ...``.
    """
    alt_set = AlternativeSet.canonical(tau)
    first = identity(tau)
    reps = []
    for rest in itertools.product(linear_orders(tau), repeat=universe.n - 1):
        profile = StrictProfile(alt_set, (first, *rest))
        if is_admissible(profile, universe.domain_kind):
            reps.append(profile)
    return reps


def table_rule(
    tables: OrbitTable,
    name: str,
    universe: Universe | None = None,
) -> VotingRule:
    """
    Build the neutral rule encoded by an orbit table.

    Args:
        tables: The orbit table.
        name: Rule name.
        universe: If given, the table must cover all of its orbits.

    Raises:
        RuleSpecError: If ``universe`` is given and an orbit has no entry.
    """
    if universe is not None:
        missing = tables.missing_orbits(universe)
        if missing:
            raise RuleSpecError(
                f"table {name} has no entry for orbit {profile_key(missing[0])} "
                f"({len(missing)} missing)"
            )
    return VotingRule(
        name=name,
        domain_kind=tables.domain_kind,
        evaluator=tables.value_at,
        tau_max=tables.tau_max,
        n=tables.n,
    )


def tabulation_universe(universe: Universe) -> Universe:
    """
    The universe an orbit table is built on: ``universe`` tabulated from one
    alternative up.

    Rival outcomes are compared on profiles over two or more slots, so a
    table must cover the small sizes whatever ``tau_min`` is.
    """
    return universe.model_copy(update={"tau_min": 1})


def table_from_rule(rule: VotingRule, universe: Universe) -> OrbitTable:
    """
    Materialize a neutral rule as an orbit table on a universe.

    Only representatives are evaluated, so a non-neutral rule is replaced
    by the neutral rule agreeing with it on representatives. Sizes below
    ``tau_min`` are tabulated too.
    """
    entries = {
        tau: {
            rep.rankings: rule.choose(rep)
            for rep in orbit_representatives(universe, tau)
        }
        for tau in tabulation_universe(universe).tau_range
    }
    return OrbitTable(universe.n, universe.domain_kind, entries)


class _JointOrbit:
    """Constraints tying the values of relabeling orbits joined by voter swaps."""

    def __init__(self, root: StrictProfile) -> None:
        self.root = root
        # member rankings -> phi with value(member) = phi(value(root))
        self.maps: dict[tuple[Ranking, ...], tuple[int, ...]] = {
            root.rankings: identity(root.tau)
        }
        self.members: list[StrictProfile] = [root]
        self.agreements: list[tuple[tuple[int, ...], tuple[int, ...]]] = []

    def explore(self) -> None:
        generators = adjacent_transpositions(self.root.n)
        queue = [self.root]
        while queue:
            member = queue.pop(0)
            phi = self.maps[member.rankings]
            for pi in generators:
                rep, mu = canonical_representative(permute_voters(member, pi))
                implied = compose(mu, phi)
                known = self.maps.get(rep.rankings)
                if known is None:
                    self.maps[rep.rankings] = implied
                    self.members.append(rep)
                    queue.append(rep)
                elif known != implied:
                    self.agreements.append((known, implied))

    def feasible(self, unanimous: bool) -> list[int]:
        values = []
        for v in range(self.root.tau):
            if any(a[v] != b[v] for a, b in self.agreements):
                continue
            if unanimous and any(
                (top := common_top(member)) is not None
                and self.maps[member.rankings][v] != top
                for member in self.members
            ):
                continue
            values.append(v)
        return values


def _random_entries(
    rng: random.Random,
    universe: Universe,
    tau: int,
    unanimous: bool,
    anonymous: bool,
) -> dict[tuple[Ranking, ...], int]:
    reps = orbit_representatives(universe, tau)
    entries: dict[tuple[Ranking, ...], int] = {}

    if not anonymous:
        for rep in reps:
            top = common_top(rep) if unanimous else None
            entries[rep.rankings] = top if top is not None else rng.randrange(tau)
        return entries

    for rep in reps:
        if rep.rankings in entries:
            continue
        orbit = _JointOrbit(rep)
        orbit.explore()
        feasible = orbit.feasible(unanimous)
        if not feasible:
            raise RuleConstraintError(
                "no alternative satisfies the anonymity constraints",
                orbit=profile_key(rep),
            )
        value = rng.choice(feasible)
        for member in orbit.members:
            entries[member.rankings] = orbit.maps[member.rankings][value]
    return entries


def random_neutral_rule(
    seed: int,
    universe: Universe,
    unanimous: bool = False,
    anonymous: bool = False,
) -> VotingRule:
    """
    Sample a reproducible neutral table rule.

    Values are drawn uniformly per relabeling orbit, for every size up to
    ``tau_max``. With ``anonymous``, orbits joined by voter permutations are
    drawn together, uniformly over the values consistent with every
    constraint of the joint orbit.

    Args:
        seed: Random seed.
        universe: Universe whose orbits are tabulated.
        unanimous: Send representatives with a common top to it.
        anonymous: Make the rule invariant under voter permutations.

    Returns:
        The sampled rule, named ``random:<seed>[:u][:a]``.

    Raises:
        RuleConstraintError: If the constraints have no solution on an orbit.
    """
    rng = random.Random(seed)
    entries = {
        tau: _random_entries(rng, universe, tau, unanimous, anonymous)
        for tau in tabulation_universe(universe).tau_range
    }
    name = f"random:{seed}" + (":u" if unanimous else "") + (":a" if anonymous else "")
    logger.debug(f"Sampled {name} on {universe.describe()}")
    return table_rule(OrbitTable(universe.n, universe.domain_kind, entries), name)


def random_extension(
    base: VotingRule,
    seed: int,
    universe: Universe,
    from_tau: int,
    unanimous: bool = True,
) -> VotingRule:
    """
    A table rule equal to ``base`` below ``from_tau`` and random from there.

    Args:
        base: Neutral rule kept on small alternative sets.
        seed: Random seed.
        universe: Universe whose orbits are tabulated.
        from_tau: First size with random values.
        unanimous: Keep unanimity on the random part.
    """
    rng = random.Random(seed)
    entries = {}
    for tau in tabulation_universe(universe).tau_range:
        if tau < from_tau:
            entries[tau] = {
                rep.rankings: base.choose(rep)
                for rep in orbit_representatives(universe, tau)
            }
        else:
            entries[tau] = _random_entries(rng, universe, tau, unanimous, False)
    name = f"{base.name}+random:{seed}@{from_tau}"
    return table_rule(OrbitTable(universe.n, universe.domain_kind, entries), name)


def _restriction_candidates(
    profile: StrictProfile, table: OrbitTable, domain_kind: DomainKind
) -> list[int]:
    """Alternatives elected by every admissible proper restriction keeping them."""
    candidates = []
    for a in range(profile.tau):
        others = [b for b in range(profile.tau) if b != a]
        elected = True
        for size in range(1, len(others)):
            for chosen in itertools.combinations(others, size):
                kept = sorted((a, *chosen))
                restricted = restrict_indices(profile, kept)
                if not is_admissible(restricted, domain_kind):
                    continue
                if table.value_at(restricted) != kept.index(a):
                    elected = False
                    break
            if not elected:
                break
        if elected:
            candidates.append(a)
    return candidates


def _extend_by_restriction(
    table: OrbitTable,
    universe: Universe,
    tau: int,
    rng: random.Random,
    anonymous: bool,
) -> OrbitTable:
    entries = {}
    for rep in orbit_representatives(universe, tau):
        candidates = _restriction_candidates(rep, table, universe.domain_kind)
        if not candidates:
            raise RuleConstraintError(
                "no alternative is elected by all of its restrictions",
                orbit=profile_key(rep),
            )
        if len(candidates) > 1 and anonymous:
            # voter-swapped orbits must agree
            raise RuleConstraintError(
                "restrictions leave several alternatives", orbit=profile_key(rep)
            )
        entries[rep.rankings] = rng.choice(candidates)
    return table.with_entries(tau, entries)


def random_iia_rule(
    seed: int,
    universe: Universe,
    anonymous: bool = False,
) -> VotingRule:
    """
    Sample a reproducible neutral, unanimous rule satisfying IIA.

    A unanimous two-alternative table is drawn as in ``random_neutral_rule``.
    Each larger profile is then sent to an alternative that every smaller
    restriction keeping it already elects, size by size. Draws without such
    an alternative somewhere on the universe are rejected and redrawn.

    Args:
        seed: Random seed.
        universe: Universe whose orbits are tabulated.
        anonymous: Draw the two-alternative table anonymously.

    Returns:
        The sampled rule, named ``iia:<seed>[:a]``.

    Raises:
        RuleConstraintError: If no draw extends to the whole universe within
            ``IIA_SAMPLE_ATTEMPTS`` attempts.
    """
    rng = random.Random(seed)
    sizes = tabulation_universe(universe).tau_range
    small = [tau for tau in sizes if tau <= 2]
    rejected: dict[str, RuleConstraintError] = {}
    name = f"iia:{seed}" + (":a" if anonymous else "")

    for attempt in range(1, IIA_SAMPLE_ATTEMPTS + 1):
        entries = {
            tau: _random_entries(rng, universe, tau, True, anonymous) for tau in small
        }
        signature = repr(sorted((tau, sorted(v.items())) for tau, v in entries.items()))
        if signature in rejected:
            continue
        table = OrbitTable(universe.n, universe.domain_kind, entries)
        try:
            for tau in sizes:
                if tau > 2:
                    table = _extend_by_restriction(table, universe, tau, rng, anonymous)
        except RuleConstraintError as e:
            rejected[signature] = e
            continue
        logger.debug(f"Sampled {name} on {universe.describe()} after {attempt} draws")
        return table_rule(table, name)

    last = list(rejected.values())[-1]
    raise RuleConstraintError(
        f"no IIA extension in {IIA_SAMPLE_ATTEMPTS} draws", orbit=last.orbit
    )


def perturb_table(table: OrbitTable, key: str, value: int) -> OrbitTable:
    """
    Copy of ``table`` with the orbit of profile ``key`` sent to ``value``.

    Raises:
        RuleSpecError: If ``key`` is malformed or ``value`` is out of range.
    """
    try:
        rep, _ = canonical_representative(profile_from_key(key))
    except ProfileError as e:
        raise RuleSpecError(str(e)) from None
    if not 0 <= value < rep.tau:
        raise RuleSpecError(
            f"value {value} outside an alternative set of size {rep.tau}"
        )
    return table.with_entry(rep, value)


def single_orbit_perturbations(
    rule: VotingRule,
    universe: Universe,
    min_tau: int = 3,
) -> Iterator[VotingRule]:
    """
    Yield every rule differing from ``rule`` on exactly one orbit.

    Only orbits of size ``>= min_tau`` are perturbed.
    """
    table = table_from_rule(rule, universe)
    for rep, value in list(table.items()):
        if rep.tau < min_tau:
            continue
        for other in range(rep.tau):
            if other == value:
                continue
            name = f"{rule.name}~{profile_key(rep)}->{rep.alt_set.label(other)}"
            yield table_rule(table.with_entry(rep, other), name)


def catalog(universe: Universe) -> list[VotingRule]:
    """
    The catalog rules meaningful on a universe.

    Dictatorships of every voter, plurality and Borda with their default
    tie-break voters (the Borda tie-break falls back to voter ``n`` when
    ``n < 4``), and the Condorcet rule on the Condorcet domain.
    """
    n = universe.n
    rules = [dictatorship(i, n) for i in range(1, n + 1)]
    rules.append(plurality_tb(DEFAULT_PLURALITY_TIE_BREAK, n))
    rules.append(borda_tb(min(DEFAULT_BORDA_TIE_BREAK, n), n))
    if universe.domain_kind == DomainKind.CONDORCET:
        rules.append(condorcet_rule())
    return [rule.restricted_to(universe.domain_kind) for rule in rules]


def dump_table(table: OrbitTable, name: str) -> str:
    """
    Serialize an orbit table, one ``<profile-key> -> <label>`` line per orbit.
    """
    lines = [
        f"# orbit table: {name}",
        f"# domain: {table.domain_kind.value}",
        f"# n: {table.n}",
    ]
    if table.sizes:
        lines.append(f"# tau: {table.sizes[0]}..{table.tau_max}")
    for rep, value in table.items():
        lines.append(f"{profile_key(rep)} -> {rep.alt_set.label(value)}")
    return "\n".join(lines) + "\n"


def load_table(text: str) -> OrbitTable:
    """
    Parse a serialized orbit table.

    Raises:
        RuleSpecError: On malformed input.
    """
    header: dict[str, str] = {}
    entries: dict[int, dict[tuple[Ranking, ...], int]] = {}

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, sep, value = line[1:].partition(":")
            if sep:
                header[key.strip().lower()] = value.strip()
            continue
        key, sep, label = line.partition("->")
        if not sep:
            raise RuleSpecError(
                f"table line {line_number}: expected '<key> -> <label>'"
            )
        try:
            rep = profile_from_key(key.strip())
            value = rep.alt_set.index(label.strip())
        except ProfileError as e:
            raise RuleSpecError(f"table line {line_number}: {e}") from None
        if canonical_representative(rep)[0] != rep:
            raise RuleSpecError(
                f"table line {line_number}: {key.strip()} "
                "is not an orbit representative"
            )
        entries.setdefault(rep.tau, {})[rep.rankings] = value

    try:
        n = int(header["n"])
        domain_kind = DomainKind(header.get("domain", DomainKind.UNRESTRICTED.value))
    except (KeyError, ValueError):
        raise RuleSpecError(
            "table header needs '# n: <int>' and a valid '# domain:'"
        ) from None
    if not entries:
        raise RuleSpecError("table has no entries")
    for values in entries.values():
        if any(len(rankings) != n for rankings in values):
            raise RuleSpecError(f"table entries disagree with n={n}")
    return OrbitTable(n, domain_kind, entries)


def parse_rule_spec(spec: str, universe: Universe) -> VotingRule:
    """
    Build a rule from a CLI specification string.

    Accepted forms: ``dict:<i>``, ``condorcet``, ``plurality[:<i>]``,
    ``borda[:<i>]``, ``table:<path>``, ``random:<seed>[:u][:a]``,
    ``iia:<seed>[:a]``.

    Raises:
        RuleSpecError: On an unknown or malformed spec. Also raised for a table
            missing an orbit of the universe or defined on a narrower domain.
        RuleConstraintError: If a sampled rule's constraints are unsatisfiable.
    """
    kind, _, arg = spec.strip().partition(":")
    kind = kind.lower()

    def voter_arg(default: int | None) -> int:
        if not arg:
            if default is None:
                raise RuleSpecError(f"rule spec {spec!r} needs a voter index")
            return default
        try:
            return int(arg)
        except ValueError:
            raise RuleSpecError(
                f"rule spec {spec!r}: {arg!r} is not a voter index"
            ) from None

    domain_kind = universe.domain_kind
    if kind == "dict":
        return dictatorship(voter_arg(None), universe.n).restricted_to(domain_kind)
    if kind == "condorcet" and not arg:
        return condorcet_rule()
    if kind == "plurality":
        rule = plurality_tb(voter_arg(DEFAULT_PLURALITY_TIE_BREAK), universe.n)
        return rule.restricted_to(domain_kind)
    if kind == "borda":
        rule = borda_tb(voter_arg(DEFAULT_BORDA_TIE_BREAK), universe.n)
        return rule.restricted_to(domain_kind)
    if kind == "table" and arg:
        path = Path(arg)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise RuleSpecError(f"cannot read table {path}: {e}") from None
        rule = table_rule(
            load_table(text), f"table:{path.name}", tabulation_universe(universe)
        )
        return rule.restricted_to(domain_kind)
    if kind in ("random", "iia") and arg:
        seed_text, *flags = arg.split(":")
        try:
            seed = int(seed_text)
        except ValueError:
            raise RuleSpecError(
                f"rule spec {spec!r}: seed must be an integer"
            ) from None
        unknown = set(flags) - ({"u", "a"} if kind == "random" else {"a"})
        if unknown:
            raise RuleSpecError(f"rule spec {spec!r}: unknown flags {sorted(unknown)}")
        if kind == "iia":
            return random_iia_rule(seed, universe, "a" in flags)
        return random_neutral_rule(seed, universe, "u" in flags, "a" in flags)

    raise RuleSpecError(f"unknown rule spec {spec!r}")

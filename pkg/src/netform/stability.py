"""Stability of a network against unilateral link breaking.

The only deviation a player has is to remove a nonempty subset of the
arcs they touch; adding arcs needs the other side's consent and is not a
unilateral move.  A network is stable when no such removal strictly
raises the deviating player's payoff.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .formation import Arc, Network, form_network, incident_arcs, remove_arcs
from .model import ActivationRule, CoalitionSpec, GameInstance
from .payoffs import active_coalitions, payoff_vector


@dataclass(frozen=True)
class Deviation:
    """One improving move: a player, the arcs removed, the network left
    behind, and the exact payoff gain (always positive)."""

    player: int
    removed_arcs: tuple[Arc, ...]
    resulting_network: Network
    gain: Fraction


@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    witness: Deviation | None

    def __post_init__(self) -> None:
        if self.stable and self.witness is not None:
            raise ValueError("stable report cannot carry a witness")


class OverlappingCoalitionsError(ValueError):
    """Raised when the fast stability criterion is asked to run on an
    instance whose coalitions do not have pairwise-disjoint arc sets."""

    def __init__(self, first: CoalitionSpec, second: CoalitionSpec):
        self.first = first
        self.second = second
        super().__init__(
            f"coalitions {first.label()} and {second.label()} share a member pair"
        )


def find_overlapping_pair(
    instance: GameInstance,
) -> tuple[CoalitionSpec, CoalitionSpec] | None:
    """First pair of coalitions whose arc sets intersect, if any.

    Two coalitions use a common arc exactly when they share at least two
    members, so this is a pure member-set test.
    """
    for a in range(len(instance.coalitions)):
        for b in range(a + 1, len(instance.coalitions)):
            ca, cb = instance.coalitions[a], instance.coalitions[b]
            if len(ca.member_set() & cb.member_set()) >= 2:
                return ca, cb
    return None


def enumerate_deviations(network: Network, player: int) -> tuple[tuple[Arc, ...], ...]:
    """Every nonempty subset of the player's incident arcs, smallest
    subsets first, lexicographic within a size."""
    incident = incident_arcs(network, player)
    out: list[tuple[Arc, ...]] = []
    for size in range(1, len(incident) + 1):
        out.extend(combinations(incident, size))
    return tuple(out)


def _active_after(
    coalition: CoalitionSpec,
    arcs: frozenset[Arc],
    removed: tuple[Arc, ...],
    rule: ActivationRule,
) -> bool:
    # activation against (arcs - removed) without building the difference
    if rule is ActivationRule.MUTUAL:
        return all(
            (i, j) in arcs and (i, j) not in removed
            and (j, i) in arcs and (j, i) not in removed
            for i, j in coalition.pairs()
        )
    return all(
        ((i, j) in arcs and (i, j) not in removed)
        or ((j, i) in arcs and (j, i) not in removed)
        for i, j in coalition.pairs()
    )


def is_stable(
    instance: GameInstance, network: Network, rule: ActivationRule
) -> StabilityReport:
    """Brute-force stability check over every break deviation.

    When unstable, the witness is the deviation with the largest gain;
    ties go to the lowest player index, then to the fewest removed arcs,
    then lexicographically by arc list.
    """
    if network.n != instance.n:
        raise ValueError(
            f"network on {network.n} players, instance has {instance.n}"
        )
    arcs = network.arcs
    best_gain = Fraction(0)
    best: tuple[int, tuple[Arc, ...]] | None = None
    for player in range(instance.n):
        mine = [
            c
            for c in instance.coalitions
            if player in c.members and c.income != 0 and c.share_of(player) != 0
        ]
        if not mine:
            continue
        before = [
            c.share_of(player) * c.income
            for c in mine
            if _active_after(c, arcs, (), rule)
        ]
        base = sum(before, Fraction(0))
        for removed in enumerate_deviations(network, player):
            after = Fraction(0)
            for c in mine:
                if _active_after(c, arcs, removed, rule):
                    after += c.share_of(player) * c.income
            gain = after - base
            if gain > best_gain:
                best_gain = gain
                best = (player, removed)
    if best is None:
        return StabilityReport(stable=True, witness=None)
    player, removed = best
    return StabilityReport(
        stable=False,
        witness=Deviation(
            player=player,
            removed_arcs=removed,
            resulting_network=remove_arcs(network, removed),
            gain=best_gain,
        ),
    )


def check_disjoint_stability(
    instance: GameInstance, network: Network, rule: ActivationRule
) -> StabilityReport:
    """Fast stability verdict for instances whose coalitions have
    pairwise-disjoint arc sets: the network is stable exactly when every
    active coalition has nonnegative income.

    The witness for an unstable network is a positive-share member of a
    negative-income active coalition breaking with one fellow member,
    which deactivates that coalition and nothing else.  Raises
    OverlappingCoalitionsError when the disjointness precondition fails,
    naming the offending pair.
    """
    if network.n != instance.n:
        raise ValueError(
            f"network on {network.n} players, instance has {instance.n}"
        )
    overlap = find_overlapping_pair(instance)
    if overlap is not None:
        raise OverlappingCoalitionsError(*overlap)
    negatives = [
        c
        for c in active_coalitions(instance, network, rule)
        if c.income < 0
    ]
    if not negatives:
        return StabilityReport(stable=True, witness=None)
    witness = None
    for c in negatives:
        gainers = sorted(m for m in c.members if c.share_of(m) > 0)
        if not gainers:
            continue
        p = gainers[0]
        q = min(m for m in c.members if m != p)
        removed = tuple(
            sorted(a for a in ((p, q), (q, p)) if a in network.arcs)
        )
        after = remove_arcs(network, removed)
        gain = (
            payoff_vector(instance, after, rule)[p]
            - payoff_vector(instance, network, rule)[p]
        )
        witness = Deviation(
            player=p, removed_arcs=removed, resulting_network=after, gain=gain
        )
        break
    return StabilityReport(stable=False, witness=witness)


@dataclass(frozen=True)
class ReachableDeviation:
    """A strictly improving one-player move between two stored profiles'
    networks: the target equals the source minus arcs all touching that
    player."""

    source: int
    target: int
    player: int
    gain: Fraction


@dataclass(frozen=True)
class RestrictedEquilibriaReport:
    equilibria: tuple[int, ...]
    deviations: tuple[ReachableDeviation, ...]


def restricted_equilibria(
    instance: GameInstance, rule: ActivationRule
) -> RestrictedEquilibriaReport:
    """Equilibria when deviations are restricted to the stored profiles.

    A profile's network is compared against every other stored profile's
    network; the move counts when the target network is the source minus
    a nonempty arc set that is entirely incident to a single player.
    Only strictly improving moves are reported.
    """
    networks = [form_network(p) for p in instance.profiles]
    payoffs = [payoff_vector(instance, g, rule) for g in networks]
    found: list[ReachableDeviation] = []
    for s, gs in enumerate(networks):
        for t, gt in enumerate(networks):
            if s == t or not gt.arcs < gs.arcs:
                continue
            removed = gs.arcs - gt.arcs
            for player in range(instance.n):
                if not all(player in arc for arc in removed):
                    continue
                gain = payoffs[t][player] - payoffs[s][player]
                if gain > 0:
                    found.append(ReachableDeviation(s, t, player, gain))
    found.sort(key=lambda d: (d.source, d.target, d.player))
    losers = {d.source for d in found}
    equilibria = tuple(s for s in range(len(networks)) if s not in losers)
    return RestrictedEquilibriaReport(equilibria, tuple(found))

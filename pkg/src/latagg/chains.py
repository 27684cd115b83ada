"""Markov chains of repeated aggregation.

Two chains are covered: boxes repeatedly absorbing a unit box, and
partitions repeatedly aggregating with a copy of themselves.  For the
latter we follow the highest probability weight transitions.
"""
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import prod

from .distributions import canonical, unit_box_distribution
from .geometry import box
from .partitions import PartitionDistribution, partition, partition_distribution
from .render import decimal_str

__all__ = [
    "unit_box_step",
    "unit_box_chain",
    "n_step_probability",
    "self_agg_distribution",
    "self_agg_distribution_2d",
    "TraceEdge",
    "TraceLevel",
    "TraceTree",
    "most_frequent_trace",
    "RatioReport",
    "fibonacci_limit_report",
    "GoldenRatioHypothesis",
]


def unit_box_step(dist):
    """Push a state distribution over boxes through one unit-box aggregation."""
    dims = {len(x) for x in dist}
    if len(dims) > 1:
        raise ValueError(f"states of mixed dimensions {sorted(dims)}")
    out = defaultdict(Fraction)
    for x, p in dist.items():
        if not p:
            continue
        for z, q in unit_box_distribution(x).items():
            out[z] += p * q
    return canonical(out)


def unit_box_chain(x, steps: int):
    dist = {box(x): Fraction(1)}
    for _ in range(steps):
        dist = unit_box_step(dist)
    return dist


def _predecessor_weight(z, dirs):
    # p(t -> z) for t = z - sum_{j in dirs} e_j, written in terms of z
    num = 2 ** len(dirs) * prod(v for j, v in enumerate(z) if j not in dirs)
    den = (prod(z[j] + 1 for j in dirs) * prod(v + 2 for j, v in enumerate(z) if j not in dirs)
           - prod(z[j] - 1 for j in dirs) * prod(v for j, v in enumerate(z) if j not in dirs))
    return Fraction(num, den)


@lru_cache(maxsize=None)
def _n_step(x, z, n):
    if n == 0:
        return Fraction(int(x == z))
    if sum(z) - sum(x) < n or any(b < a for a, b in zip(x, z)):
        return Fraction(0)
    l = len(z)
    total = Fraction(0)
    for k in range(1, l + 1):
        for dirs in combinations(range(l), k):
            t = tuple(v - (j in dirs) for j, v in enumerate(z))
            if any(b < a for a, b in zip(x, t)):
                continue
            total += _predecessor_weight(z, dirs) * _n_step(x, t, n - 1)
    return total


def n_step_probability(x, z, n: int) -> Fraction:
    """p^(n)_{x,z} of the unit-box chain by the backward Delannoy-type recurrence."""
    if n < 0:
        raise ValueError("number of steps must be non-negative")
    x, z = box(x), tuple(int(v) for v in z)
    if len(x) != len(z):
        raise ValueError(f"{x} and {z} have different dimensions")
    if any(b < a for a, b in zip(x, z)):
        return Fraction(0)
    return _n_step(x, z, n)


def self_agg_distribution(lam) -> PartitionDistribution:
    return partition_distribution(lam, lam)


def self_agg_distribution_2d(lam) -> PartitionDistribution:
    """Self-aggregation of a two-part partition from the closed-form rows."""
    a, b = partition(lam)
    if a == b:
        raise ValueError("closed form assumes lam_1 > lam_2")
    # counts over the 8(a+b) attachments of both orientations
    rows = [((2 * a, 2 * b), 4)]
    rows += [((2 * a - s, 2 * b), 4) for s in range(1, a)]
    rows += [((2 * a, 2 * b - s), 4) for s in range(1, b)]
    rows += [((2 * a, b), 2), ((a, 2 * b), 2), ((a + b, a + b), 4)]
    rows += [((a + b, a + b - s), 8) for s in range(1, b)]
    rows += [((a + b, a), 4 * (a - b + 1))]
    counts = defaultdict(int)
    for z, c in rows:
        counts[tuple(sorted(z, reverse=True))] += c
    return PartitionDistribution(dict(counts), 8 * (a + b))


@dataclass(frozen=True)
class TraceEdge:
    parent: tuple
    child: tuple
    probability: Fraction


@dataclass
class TraceLevel:
    """States reached after one more most-frequent self-aggregation.

    ``expanded`` is False when the level holds more states than the expansion
    limit; those states are listed but not followed.
    """

    states: list
    edges: list
    expanded: bool = True

    @property
    def tie_count(self) -> int:
        return len(self.states)

    @property
    def probabilities(self):
        return sorted({e.probability for e in self.edges}, reverse=True)

    @property
    def probability(self) -> Fraction:
        """The common transition probability; ambiguous levels raise."""
        probs = self.probabilities
        if len(probs) != 1:
            raise ValueError(f"level mixes transition probabilities {probs}")
        return probs[0]


@dataclass
class TraceTree:
    root: tuple
    levels: list = field(default_factory=list)

    def describe(self) -> str:
        lines = [f"{list(self.root)}"]
        for n, level in enumerate(self.levels, 1):
            probs = "/".join(decimal_str(p) for p in level.probabilities)
            if len(level.states) <= 8:
                states = " ".join(str(list(s)) for s in level.states)
            else:
                states = f"({level.tie_count} results)"
            tail = "" if level.expanded else "  [not expanded]"
            lines.append(f"{n}: {probs}  {states}{tail}")
        return "\n".join(lines)


def most_frequent_trace(lam0, steps: int, expand_limit: int = 8) -> TraceTree:
    """Follow every highest probability weight self-aggregation for ``steps`` levels.

    Ties are kept, so the trace is a tree.  A level with more than
    ``expand_limit`` states is recorded in full but not expanded further.
    """
    if steps < 1:
        raise ValueError("steps must be at least 1")
    tree = TraceTree(partition(lam0))
    frontier = [tree.root]
    for _ in range(steps):
        if not frontier:
            break
        states, edges = [], []
        for parent in frontier:
            winners, p = self_agg_distribution(parent).argmax()
            for child in winners:
                edges.append(TraceEdge(parent, child, p))
                if child not in states:
                    states.append(child)
        states.sort(reverse=True)
        expanded = len(states) <= expand_limit
        tree.levels.append(TraceLevel(states, edges, expanded))
        frontier = states if expanded else []
    return tree


class GoldenRatioHypothesis(ValueError):
    """A rectangle on the chain does not satisfy lam_1 > lam_2 + 3."""


@dataclass(frozen=True)
class RatioReport:
    step: int
    state: tuple
    ratio: Fraction
    # None at the first step: there is no preceding transition
    probability: Fraction = None

    @property
    def ratio_decimal(self) -> str:
        return decimal_str(self.ratio)

    @property
    def probability_decimal(self):
        return None if self.probability is None else decimal_str(self.probability)


def fibonacci_limit_report(lam0, steps: int):
    """Iterate the most frequent self-aggregation of a rectangle.

    The argmax of every step is computed from the exact distribution and
    checked to be the side-to-end result (lam_1 + lam_2, lam_1).
    """
    lam = partition(lam0)
    if len(lam) != 2:
        raise ValueError(f"need a two-part partition, got {lam}")
    if not lam[0] > lam[1] + 3:
        raise GoldenRatioHypothesis(
            f"{list(lam)} violates lam_1 > lam_2 + 3, under which the side-to-end "
            "transition is the unique most frequent one")
    reports = [RatioReport(1, lam, Fraction(lam[0], lam[1]))]
    for n in range(2, steps + 1):
        winners, p = self_agg_distribution(lam).argmax()
        expected = (lam[0] + lam[1], lam[0])
        if winners != [expected]:
            # lam_1 - lam_2 of the next state is the previous lam_2; starts
            # with lam_2 < 3 lose the side-to-end argmax after one step
            raise GoldenRatioHypothesis(
                f"step {n}: {list(lam)} no longer has lam_1 > lam_2 + 3; "
                f"most frequent results are {winners}")
        lam = expected
        reports.append(RatioReport(n, lam, Fraction(lam[0], lam[1]), p))
    return reports

"""Exact distributions of box aggregation and of the number of growth directions."""
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import prod

from .geometry import attachment_count, box, check_pair, parameter_set, side_result
from .symfunc import require_oriented, big_r_all, moment_polynomial, u_ddu

__all__ = [
    "BoxDistribution",
    "canonical",
    "orient",
    "box_distribution",
    "box_distribution_2d",
    "growth_direction_prob",
    "growth_count_pmf",
    "moment",
    "unit_box_distribution",
    "unit_mean_directions",
]


def canonical(mapping):
    """Copy of ``mapping`` with keys in descending lexicographic order."""
    return {k: mapping[k] for k in sorted(mapping, reverse=True)}


@dataclass(frozen=True)
class BoxDistribution:
    """Outcome -> probability, with the integer counts it was built from.

    Also used for partition outcomes; the keys are then non-increasing tuples.
    """

    counts: dict
    total_attachments: int
    entries: dict = field(init=False, compare=False)

    def __post_init__(self):
        if sum(self.counts.values()) != self.total_attachments:
            raise ValueError("counts do not add up to the number of attachments")
        counts = canonical({k: c for k, c in self.counts.items() if c})
        object.__setattr__(self, "counts", counts)
        object.__setattr__(
            self, "entries",
            {k: Fraction(c, self.total_attachments) for k, c in counts.items()})

    def __eq__(self, other):
        if not isinstance(other, BoxDistribution):
            return NotImplemented
        return self.entries == other.entries

    def __getitem__(self, outcome):
        return self.entries.get(tuple(outcome), Fraction(0))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def items(self):
        return self.entries.items()

    def argmax(self):
        """All outcomes attaining the largest probability, and that probability."""
        best = max(self.counts.values())
        return [k for k, c in self.counts.items() if c == best], Fraction(best, self.total_attachments)


def orient(x, y):
    """Swap sides coordinatewise so that x_i >= y_i; the distribution is unchanged."""
    x, y = check_pair(x, y)
    return (tuple(max(a, b) for a, b in zip(x, y)),
            tuple(min(a, b) for a, b in zip(x, y)))


def box_counts(x, y) -> Counter:
    """Histogram of aggregation results over the whole parameter set."""
    x, y = check_pair(x, y)
    tables = [[side_result(a, b, s) for s in range(a + b + 1)] for a, b in zip(x, y)]
    hist = Counter()
    if len(x) == 1:
        t0, = tables
        for s0, in parameter_set(x, y):
            hist[(t0[s0],)] += 1
    else:
        for s in parameter_set(x, y):
            hist[tuple(t[si] for t, si in zip(tables, s))] += 1
    return hist


def box_distribution(x, y) -> BoxDistribution:
    x, y = check_pair(x, y)
    return BoxDistribution(box_counts(x, y), attachment_count(x, y))


def box_distribution_2d(x, y) -> BoxDistribution:
    """Rectangle aggregation from the closed-form attachment classes."""
    x, y = check_pair(x, y)
    if len(x) != 2:
        raise ValueError(f"closed form is for rectangles, got dimension {len(x)}")
    (x1, x2), (y1, y2) = x, y
    counts = Counter()
    counts[(x1 + y1, x2 + y2)] += 4
    for s in range(1, min(x1, y1)):
        counts[(x1 + y1 - s, x2 + y2)] += 4
    for s in range(1, min(x2, y2)):
        counts[(x1 + y1, x2 + y2 - s)] += 4
    counts[(x1 + y1, max(x2, y2))] += 2 * abs(y2 - x2) + 2
    counts[(max(x1, y1), x2 + y2)] += 2 * abs(y1 - x1) + 2
    return BoxDistribution(counts, 2 * (x1 + x2 + y1 + y2))


def growth_direction_prob(x, y, dirs) -> Fraction:
    """P(z_j > x_j exactly for j in ``dirs``), 0-based indices, x_i >= y_i."""
    x, y = require_oriented(x, y)
    dirs = set(dirs)
    if not dirs:
        raise ValueError("dirs must be nonempty; every attachment grows somewhere")
    if any(not 0 <= j < len(x) for j in dirs):
        raise IndexError(f"direction indices {sorted(dirs)} out of range")
    grown = prod(y[j] for j in dirs) - prod(y[j] - 1 for j in dirs)
    fixed = prod(x[j] - y[j] + 1 for j in range(len(x)) if j not in dirs)
    return Fraction(2 ** len(dirs) * grown * fixed, attachment_count(x, y))


def growth_count_pmf(x, y):
    """[P(X=0), ..., P(X=l)] for X the number of grown sides, x_i >= y_i."""
    x, y = require_oriented(x, y)
    a = [p - q + 1 for p, q in zip(x, y)]
    full = big_r_all(a, y)
    inner = big_r_all(a, [q - 1 for q in y])
    total = attachment_count(x, y)
    probs = [Fraction(2 ** k * (f - g), total) for k, (f, g) in enumerate(zip(full, inner))]
    # every attachment has an extreme coordinate, which always grows
    assert probs[0] == 0
    return probs


def moment(x, y, p: int) -> Fraction:
    """E[X**p] from the moment generating polynomial evaluated at u = 2."""
    if p < 0:
        raise ValueError("moment order must be non-negative")
    m = moment_polynomial(x, y)
    q = m
    for _ in range(p):
        q = u_ddu(q)
    return q(2) / m(2)


def unit_box_distribution(x) -> BoxDistribution:
    """Aggregation of ``x`` with the unit box, from the closed form."""
    x = box(x)
    l = len(x)
    counts = {}
    for k in range(1, l + 1):
        for dirs in combinations(range(l), k):
            z = tuple(v + (i in dirs) for i, v in enumerate(x))
            counts[z] = 2 ** k * prod(x[j] for j in range(l) if j not in dirs)
    total = prod(v + 2 for v in x) - prod(x)
    return BoxDistribution(counts, total)


def unit_mean_directions(x) -> Fraction:
    """Expected number of grown sides when a unit box attaches to ``x``."""
    x = box(x)
    num = sum(Fraction(2, 2 + v) for v in x)
    return num / (1 - prod(Fraction(v, v + 2) for v in x))

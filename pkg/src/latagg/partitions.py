"""Aggregation of partitions: boxes identified up to 90-degree rotations.

Two equivalent constructions are provided.  :func:`partition_distribution`
counts box attachments of a fixed representative of ``lam`` against every
rotation of ``mu``.  :func:`partition_distribution_combinatorial` works part
by part with overlaps of strips and never looks at the parameter set.
"""
from collections import Counter
from dataclasses import dataclass
from itertools import product
from math import prod

from .distributions import BoxDistribution, box_counts
from .geometry import attachment_count, box

__all__ = [
    "Overlap",
    "PartitionDistribution",
    "partition",
    "rotations",
    "overlaps",
    "partition_distribution",
    "partition_distribution_combinatorial",
]

# same container, keys are partitions
PartitionDistribution = BoxDistribution


def partition(parts):
    """Sort ``parts`` into a non-increasing tuple of positive integers."""
    return tuple(sorted(box(parts), reverse=True))


def _check_lengths(lam, mu):
    if len(lam) != len(mu):
        raise ValueError(f"partitions {lam} and {mu} have different lengths")


def rotations(lam):
    """All distinct rearrangements of the parts, in descending lexicographic order."""
    # next-permutation walk over the multiset, starting from the sorted order
    a = sorted(box(lam))
    out = [tuple(a)]
    n = len(a)
    while True:
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            break
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])
        out.append(tuple(a))
    return out[::-1]


@dataclass(frozen=True)
class Overlap:
    """Covered length of two strips laid on top of each other.

    ``weight`` is the number of offsets producing this length: the slide
    range |a-b|+1 for the absorption, two mirror-image offsets otherwise.
    """

    length: int
    weight: int
    attachment: bool = False


def overlaps(a: int, b: int):
    lo, hi = max(a, b), a + b
    out = [Overlap(lo, abs(a - b) + 1)]
    out += [Overlap(c, 2) for c in range(lo + 1, hi)]
    out.append(Overlap(hi, 2, attachment=True))
    return out


def partition_distribution(lam, mu, representative=None) -> PartitionDistribution:
    """Fix a box of ``lam`` and attach every rotation of ``mu`` to it.

    ``representative`` may be any rearrangement of ``lam``; the sorted one
    is used by default.
    """
    lam, mu = partition(lam), partition(mu)
    _check_lengths(lam, mu)
    x = lam if representative is None else box(representative)
    if partition(x) != lam:
        raise ValueError(f"{x} is not a rotation of {lam}")
    counts = Counter()
    total = 0
    for y in rotations(mu):
        for z, c in box_counts(x, y).items():
            counts[tuple(sorted(z, reverse=True))] += c
        total += attachment_count(x, y)
    return PartitionDistribution(counts, total)


def partition_distribution_combinatorial(lam, mu) -> PartitionDistribution:
    """Overlap each part of ``lam`` with a part of ``mu`` under every arrangement.

    A choice of overlaps contributes only if at least one of them is an
    attachment; its weight is the product of the overlap weights.
    """
    lam, mu = partition(lam), partition(mu)
    _check_lengths(lam, mu)
    counts = Counter()
    for arrangement in rotations(mu):
        per_part = [overlaps(a, b) for a, b in zip(lam, arrangement)]
        for choice in product(*per_part):
            if not any(o.attachment for o in choice):
                continue
            nu = tuple(sorted((o.length for o in choice), reverse=True))
            counts[nu] += prod(o.weight for o in choice)
    return PartitionDistribution(counts, sum(counts.values()))

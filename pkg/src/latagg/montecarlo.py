"""Seeded Monte Carlo sampling of attachments.

This is an oracle for the exact distributions, so it shares nothing with
them beyond the aggregation formula for a single attachment.

Random numbers come from SplitMix64, the generator behind Java's
SplittableRandom::

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

all arithmetic modulo 2**64.  Trial ``i`` (0-based) of a run seeded with
``seed`` uses its own SplitMix64 stream whose initial state is output
number ``i + 1`` of ``SplitMix64(seed)``.  Within a trial:

* an integer uniform on ``[0, n)`` is ``u % n`` for the first draw ``u``
  below ``2**64 - (2**64 % n)`` (earlier draws are discarded);
* a parameter point is a uniform index into the full grid
  ``prod(x_i + y_i + 1)``, decoded with the last coordinate varying
  fastest, redrawn until it lies on the boundary;
* in partition mode, a rotation of ``mu`` is first drawn with probability
  proportional to its number of attachments (cumulative order of
  :func:`latagg.partitions.rotations`).

Because every trial owns its stream, histograms do not depend on how the
trials are split into chunks or workers.
"""
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from bisect import bisect_right
from math import prod

import numpy as np

from .distributions import canonical
from .geometry import aggregate_at, attachment_count, check_pair, side_result
from .partitions import partition, rotations

__all__ = [
    "SplitMix64",
    "SampleConfig",
    "EmpiricalDistribution",
    "sample_parameter",
    "sample_attachment",
    "sample_partition_attachment",
    "sample_parameters",
    "estimate_distribution",
    "total_variation",
]

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * MIX1) & MASK
    z = ((z ^ (z >> 27)) * MIX2) & MASK
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK
        return _mix(self.state)

    def below(self, n: int) -> int:
        limit = (1 << 64) - (1 << 64) % n
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n

    @classmethod
    def for_trial(cls, seed: int, trial: int) -> "SplitMix64":
        return cls(_mix((seed + (trial + 1) * GOLDEN) & MASK))


@dataclass(frozen=True)
class SampleConfig:
    trials: int
    seed: int = 0

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if not 0 <= self.seed <= MASK:
            raise ValueError("seed must be an unsigned 64-bit integer")


@dataclass(frozen=True)
class EmpiricalDistribution:
    counts: dict
    total: int

    def __post_init__(self):
        if sum(self.counts.values()) != self.total:
            raise ValueError("counts do not sum to total")

    def frequency(self, outcome) -> Fraction:
        return Fraction(self.counts.get(tuple(outcome), 0), self.total)

    def frequencies(self):
        return {k: Fraction(c, self.total) for k, c in self.counts.items()}


def total_variation(empirical: EmpiricalDistribution, exact) -> float:
    """Half the L1 distance between sampled frequencies and exact probabilities."""
    keys = set(empirical.counts) | set(exact.entries)
    return float(sum(abs(empirical.frequency(k) - exact[k]) for k in keys) / 2)


# scalar reference path


def sample_parameter(x, y, rng: SplitMix64):
    ext = [a + b for a, b in zip(x, y)]
    size = prod(n + 1 for n in ext)
    while True:
        idx = rng.below(size)
        s = []
        for n in reversed(ext):
            idx, r = divmod(idx, n + 1)
            s.append(r)
        s.reverse()
        if any(v == 0 or v == n for v, n in zip(s, ext)):
            return tuple(s)


def sample_attachment(x, y, rng: SplitMix64):
    """Result of one uniformly chosen attachment of ``y`` to ``x``."""
    x, y = check_pair(x, y)
    return aggregate_at(x, y, sample_parameter(x, y, rng))


def sample_partition_attachment(lam, mu, rng: SplitMix64):
    lam, mu = partition(lam), partition(mu)
    rots = rotations(mu)
    cum = list(accumulate(attachment_count(lam, y) for y in rots))
    y = rots[bisect_right(cum, rng.below(cum[-1]))]
    return tuple(sorted(sample_attachment(lam, y, rng), reverse=True))


# vectorised path; must reproduce the scalar path draw for draw

_U = np.uint64


def _mix_vec(z):
    z = (z ^ (z >> _U(30))) * _U(MIX1)
    z = (z ^ (z >> _U(27))) * _U(MIX2)
    return z ^ (z >> _U(31))


def _trial_states(seed, start, stop):
    i = np.arange(start + 1, stop + 1, dtype=np.uint64)
    return _mix_vec(_U(seed) + i * _U(GOLDEN))


def _below_vec(state, idx, n):
    """Uniform draws on [0, n) for the trials ``idx``; advances their states."""
    rem = (1 << 64) % n
    limit = None if rem == 0 else _U((1 << 64) - rem)
    out = np.empty(len(idx), dtype=np.uint64)
    pos = np.arange(len(idx))
    while pos.size:
        t = idx[pos]
        state[t] += _U(GOLDEN)
        u = _mix_vec(state[t])
        ok = np.ones(len(t), bool) if limit is None else u < limit
        out[pos[ok]] = u[ok] % _U(n)
        pos = pos[~ok]
    return out


def _parameters_vec(state, idx, ext):
    ext = np.asarray(ext, dtype=np.int64)
    size = int(np.prod(ext + 1))
    out = np.empty((len(idx), len(ext)), dtype=np.int64)
    pos = np.arange(len(idx))
    while pos.size:
        v = _below_vec(state, idx[pos], size)
        s = np.empty((len(pos), len(ext)), dtype=np.int64)
        for i in range(len(ext) - 1, -1, -1):
            base = _U(ext[i] + 1)
            s[:, i] = (v % base).astype(np.int64)
            v = v // base
        on = ((s == 0) | (s == ext)).any(axis=1)
        out[pos[on]] = s[on]
        pos = pos[~on]
    return out


def _results(x, y, s):
    z = np.empty_like(s)
    for i, (a, b) in enumerate(zip(x, y)):
        table = np.array([side_result(a, b, v) for v in range(a + b + 1)])
        z[:, i] = table[s[:, i]]
    return z


def _histogram(rows) -> Counter:
    if not len(rows):
        return Counter()
    keys, counts = np.unique(rows, axis=0, return_counts=True)
    return Counter({tuple(int(v) for v in k): int(c) for k, c in zip(keys, counts)})


def _box_chunk(x, y, seed, start, stop):
    state = _trial_states(seed, start, stop)
    idx = np.arange(stop - start)
    s = _parameters_vec(state, idx, [a + b for a, b in zip(x, y)])
    return _histogram(_results(x, y, s))


def _partition_chunk(lam, mu, seed, start, stop):
    state = _trial_states(seed, start, stop)
    n = stop - start
    rots = rotations(mu)
    cum = np.cumsum([attachment_count(lam, y) for y in rots])
    r = np.searchsorted(cum, _below_vec(state, np.arange(n), int(cum[-1])).astype(np.int64),
                        side="right")
    hist = Counter()
    for k, y in enumerate(rots):
        idx = np.nonzero(r == k)[0]
        if not idx.size:
            continue
        s = _parameters_vec(state, idx, [a + b for a, b in zip(lam, y)])
        z = -np.sort(-_results(lam, y, s), axis=1)
        hist.update(_histogram(z))
    return hist


def sample_parameters(x, y, cfg: SampleConfig):
    """``cfg.trials`` parameter points as an integer array of shape (trials, l)."""
    x, y = check_pair(x, y)
    state = _trial_states(cfg.seed, 0, cfg.trials)
    return _parameters_vec(state, np.arange(cfg.trials), [a + b for a, b in zip(x, y)])


def estimate_distribution(x, y, cfg: SampleConfig, partition_mode=False,
                          workers=1, chunk=1 << 17) -> EmpiricalDistribution:
    """Histogram of ``cfg.trials`` sampled aggregation results.

    In partition mode ``x`` and ``y`` are partitions and outcomes are sorted.
    """
    if partition_mode:
        x, y = partition(x), partition(y)
        if len(x) != len(y):
            raise ValueError(f"partitions {x} and {y} have different lengths")
        work = _partition_chunk
    else:
        x, y = check_pair(x, y)
        work = _box_chunk
    bounds = [(a, min(a + chunk, cfg.trials)) for a in range(0, cfg.trials, chunk)]
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda b: work(x, y, cfg.seed, *b), bounds))
    else:
        parts = [work(x, y, cfg.seed, *b) for b in bounds]
    total = Counter()
    for p in parts:
        total.update(p)
    return EmpiricalDistribution(canonical(dict(total)), cfg.trials)

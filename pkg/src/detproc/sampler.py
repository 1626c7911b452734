"""Monte Carlo ground truth: Plancherel-random diagrams via row insertion.

A uniform permutation of {1..n} is drawn by an explicit Fisher-Yates
shuffle, its insertion shape computed by Robinson-Schensted row bumping
(so lambda_1 is the longest increasing subsequence length), and the
poissonized measure arises by first drawing the size from Poisson(theta)
by CDF inversion.

Randomness comes from numpy's Philox counter-based generator.  A stream is
keyed by the 128-bit pair (seed, stream_index); substreams with distinct
indices are statistically independent and fully deterministic, so parallel
accumulation over substreams reproduces, count for count, the serial run
over the concatenated streams.
"""

from __future__ import annotations

import csv
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import exp, sqrt
from bisect import bisect_left

import numpy as np

from .errors import DomainError
from .partitions import YoungDiagram, fr_config, frobenius

__all__ = [
    "SeededGenerator",
    "EmpiricalCorrelation",
    "rsk_shape",
    "sample_plancherel_n",
    "sample_poissonized",
    "empirical_correlation",
    "empirical_correlations",
    "write_samples_csv",
]


class SeededGenerator:
    """Philox-backed stream with splittable substreams.

    The bit stream is a pure function of (seed, stream): identical inputs
    give identical samples on every platform.  `substream(i)` returns the
    independent stream keyed (seed, i); the parent itself is stream 0.
    """

    def __init__(self, seed: int, stream: int = 0):
        self.seed = int(seed)
        self.stream = int(stream)
        self._gen = np.random.Generator(
            np.random.Philox(key=np.array([self.seed, self.stream],
                                          dtype=np.uint64))
        )

    def substream(self, index: int) -> "SeededGenerator":
        return SeededGenerator(self.seed, index)

    def random(self) -> float:
        return float(self._gen.random())

    def permutation(self, n: int) -> list:
        """Fisher-Yates shuffle of (1..n), spelled out for reproducibility."""
        word = list(range(1, n + 1))
        for i in range(n - 1, 0, -1):
            j = int(self._gen.integers(0, i + 1))
            word[i], word[j] = word[j], word[i]
        return word

    def poisson(self, theta: float) -> int:
        """Poisson(theta) by CDF inversion; exact for the desk scale theta <= 100."""
        if not theta > 0.0:
            raise DomainError(f"poisson needs theta > 0, got {theta}")
        u = self.random()
        p = exp(-theta)
        cdf = p
        k = 0
        cap = int(theta + 40.0 * sqrt(theta) + 200.0)
        while u > cdf and k < cap:
            k += 1
            p *= theta / k
            cdf += p
        return k


def rsk_shape(word) -> YoungDiagram:
    """Shape of the Robinson-Schensted insertion tableau of a permutation."""
    word = list(word)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise DomainError(f"not a permutation of 1..{len(word)}: {word}")
    rows: list[list[int]] = []
    for value in word:
        for row in rows:
            pos = bisect_left(row, value)
            if pos == len(row):
                row.append(value)
                value = None
                break
            row[pos], value = value, row[pos]
        if value is not None:
            rows.append([value])
    return YoungDiagram([len(r) for r in rows])


def sample_plancherel_n(n: int, gen: SeededGenerator) -> YoungDiagram:
    """One diagram from Plancherel(n) = RSK push-forward of a uniform permutation."""
    if n < 0:
        raise DomainError(f"need n >= 0, got {n}")
    if n == 0:
        return YoungDiagram()
    return rsk_shape(gen.permutation(n))


def sample_poissonized(theta: float, gen: SeededGenerator) -> YoungDiagram:
    """One diagram from the poissonized Plancherel measure."""
    return sample_plancherel_n(gen.poisson(theta), gen)


@dataclass(frozen=True)
class EmpiricalCorrelation:
    points: tuple          # doubled half-integers (2x)
    estimate: float
    stderr: float
    n_samples: int


def _count_chunk(theta: float, subsets, n: int, gen: SeededGenerator) -> list:
    counts = [0] * len(subsets)
    for _ in range(n):
        config = fr_config(sample_poissonized(theta, gen))
        for i, subset in enumerate(subsets):
            if subset <= config:
                counts[i] += 1
    return counts


def empirical_correlations(theta: float, point_sets, n_samples: int,
                           gen: SeededGenerator, n_substreams: int = 1,
                           parallel: bool = False) -> list:
    """Containment frequencies for several point sets in one sample pass.

    Samples are split across `n_substreams` independent substreams of
    `gen`; totals are independent of `parallel` because each substream's
    counts are deterministic integers.
    """
    subsets = []
    for pts in point_sets:
        pts = tuple(int(p) for p in pts)
        if len(set(pts)) != len(pts):
            raise DomainError(f"duplicate points in {pts}")
        if any(p % 2 == 0 for p in pts):
            raise DomainError(f"points must be doubled half-integers, got {pts}")
        subsets.append(frozenset(pts))
    if n_substreams < 1:
        raise DomainError("need at least one substream")
    sizes = [n_samples // n_substreams + (1 if i < n_samples % n_substreams else 0)
             for i in range(n_substreams)]
    jobs = [(theta, subsets, sizes[i], gen.substream(i))
            for i in range(n_substreams)]
    if parallel and n_substreams > 1:
        with ThreadPoolExecutor(max_workers=min(n_substreams, 8)) as pool:
            chunked = list(pool.map(lambda args: _count_chunk(*args), jobs))
    else:
        chunked = [_count_chunk(*args) for args in jobs]
    totals = [sum(c[i] for c in chunked) for i in range(len(subsets))]
    out = []
    for pts, total in zip(point_sets, totals):
        p_hat = total / n_samples
        out.append(EmpiricalCorrelation(
            tuple(int(p) for p in pts), p_hat,
            sqrt(p_hat * (1.0 - p_hat) / n_samples), n_samples))
    return out


def empirical_correlation(theta: float, points, n_samples: int,
                          gen: SeededGenerator, n_substreams: int = 1,
                          parallel: bool = False) -> EmpiricalCorrelation:
    """Frequency of configurations containing all the given points."""
    return empirical_correlations(theta, [points], n_samples, gen,
                                  n_substreams, parallel)[0]


def write_samples_csv(path, theta: float, n_samples: int,
                      gen: SeededGenerator) -> None:
    """Dump samples: one row (sample_index, size, d, doubled Fr points)."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["sample_index", "size", "d", "fr_points_doubled"])
        for i in range(n_samples):
            diagram = sample_poissonized(theta, gen)
            coords = frobenius(diagram)
            pts = sorted(fr_config(diagram))
            writer.writerow([i, diagram.size, coords.d,
                             " ".join(str(p) for p in pts)])

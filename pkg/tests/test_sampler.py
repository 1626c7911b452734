"""RSK sampling: exactness, determinism, substream semantics."""

import csv
import math

import pytest

from detproc import kernels, oracle, sampler
from detproc.errors import DomainError
from detproc.partitions import YoungDiagram, fr_config


def test_rsk_shapes():
    assert sampler.rsk_shape([1]) == YoungDiagram([1])
    assert sampler.rsk_shape(list(range(1, 8))) == YoungDiagram([7])
    assert sampler.rsk_shape([2, 1, 4, 3]) == YoungDiagram([2, 2])
    assert sampler.rsk_shape([3, 2, 1]) == YoungDiagram([1, 1, 1])


def test_rsk_first_row_is_lis():
    # longest increasing subsequence by quadratic dynamic programming
    def lis(word):
        best = [1] * len(word)
        for i in range(len(word)):
            for j in range(i):
                if word[j] < word[i]:
                    best[i] = max(best[i], best[j] + 1)
        return max(best)

    gen = sampler.SeededGenerator(2024)
    for _ in range(40):
        word = gen.permutation(30)
        assert sampler.rsk_shape(word).rows[0] == lis(word)


def test_rsk_rejects_malformed():
    with pytest.raises(DomainError):
        sampler.rsk_shape([1, 1, 2])
    with pytest.raises(DomainError):
        sampler.rsk_shape([0, 1])


def test_sample_plancherel_small_n():
    gen = sampler.SeededGenerator(5)
    assert sampler.sample_plancherel_n(0, gen) == YoungDiagram()
    assert sampler.sample_plancherel_n(1, gen) == YoungDiagram([1])


def test_plancherel3_frequencies():
    gen = sampler.SeededGenerator(17)
    n = 30000
    counts = {}
    for _ in range(n):
        rows = sampler.sample_plancherel_n(3, gen).rows
        counts[rows] = counts.get(rows, 0) + 1
    for rows, p in (((3,), 1 / 6), ((2, 1), 2 / 3), ((1, 1, 1), 1 / 6)):
        sigma = math.sqrt(p * (1 - p) / n)
        assert abs(counts[rows] / n - p) < 4 * sigma


def test_poissonized_empty_and_mean():
    theta = 1.0
    gen = sampler.SeededGenerator(3)
    n = 30000
    empties = 0
    total = 0
    for _ in range(n):
        d = sampler.sample_poissonized(theta, gen)
        empties += (d.size == 0)
        total += d.size
    p0 = math.exp(-theta)
    assert abs(empties / n - p0) < 4 * math.sqrt(p0 * (1 - p0) / n)
    assert abs(total / n - theta) < 4 * math.sqrt(theta / n)


def test_poissonized_single_box_probability():
    theta = 1.0
    gen = sampler.SeededGenerator(23)
    n = 30000
    hits = sum(sampler.sample_poissonized(theta, gen) == YoungDiagram([1])
               for _ in range(n))
    p = theta * math.exp(-theta)
    assert abs(hits / n - p) < 4 * math.sqrt(p * (1 - p) / n)


def test_poisson_inversion_large_theta():
    gen = sampler.SeededGenerator(61)
    n = 2000
    theta = 50.0
    mean = sum(gen.poisson(theta) for _ in range(n)) / n
    assert abs(mean - theta) < 4 * math.sqrt(theta / n)


def test_determinism():
    a = sampler.SeededGenerator(99)
    b = sampler.SeededGenerator(99)
    seq_a = [sampler.sample_poissonized(2.0, a).rows for _ in range(200)]
    seq_b = [sampler.sample_poissonized(2.0, b).rows for _ in range(200)]
    assert seq_a == seq_b
    ea = sampler.empirical_correlation(2.0, (1, -1), 5000,
                                       sampler.SeededGenerator(4), 3)
    eb = sampler.empirical_correlation(2.0, (1, -1), 5000,
                                       sampler.SeededGenerator(4), 3)
    assert ea == eb


def test_parallel_equals_serial_substreams():
    serial = sampler.empirical_correlations(
        2.0, [(1,), (1, -1)], 6000, sampler.SeededGenerator(8),
        n_substreams=4, parallel=False)
    parallel = sampler.empirical_correlations(
        2.0, [(1,), (1, -1)], 6000, sampler.SeededGenerator(8),
        n_substreams=4, parallel=True)
    assert serial == parallel


def test_empirical_correlation_validation():
    gen = sampler.SeededGenerator(0)
    with pytest.raises(DomainError):
        sampler.empirical_correlation(1.0, (1, 1), 10, gen)
    with pytest.raises(DomainError):
        sampler.empirical_correlation(1.0, (2,), 10, gen)


def test_conjugation_symmetry():
    theta = 2.0
    n = 40000
    res = sampler.empirical_correlations(theta, [(1,), (-1,)], n,
                                         sampler.SeededGenerator(31), 2)
    diff = abs(res[0].estimate - res[1].estimate)
    band = 4 * math.sqrt(res[0].stderr ** 2 + res[1].stderr ** 2)
    assert diff < band


def test_far_tail_is_empty():
    est = sampler.empirical_correlation(1.0, (41,), 20000,
                                        sampler.SeededGenerator(12))
    assert est.estimate == 0.0


def test_empirical_matches_kernel_smoke():
    theta = 1.0
    n = 40000
    est = sampler.empirical_correlation(theta, (1,), n, sampler.SeededGenerator(77))
    kop = oracle.materialize(kernels.discrete_bessel_k(theta),
                             oracle.lattice_window(20))
    pred = oracle.correlation_from_k(kop, [1])
    assert abs(est.estimate - pred) < 4 * est.stderr


def test_expected_point_count_matches_kernel_trace():
    theta = 4.0
    n = 40000
    gen = sampler.SeededGenerator(55)
    total = 0
    for _ in range(n):
        total += len(fr_config(sampler.sample_poissonized(theta, gen)))
    mean = total / n
    kop = oracle.materialize(kernels.discrete_bessel_k(theta),
                             oracle.lattice_window(30))
    trace = sum(kop.value_at(x, x) for x in kop.window.points)
    # var of |Fr| is bounded by its mean here; 4 sigma with a safe bound
    assert abs(mean - trace) < 4 * math.sqrt(2 * trace / n)


def test_samples_csv(tmp_path):
    path = tmp_path / "samples.csv"
    sampler.write_samples_csv(path, 1.5, 50, sampler.SeededGenerator(1))
    with open(path) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["sample_index", "size", "d", "fr_points_doubled"]
    assert len(rows) == 51
    for idx, row in enumerate(rows[1:]):
        assert int(row[0]) == idx
        pts = [int(t) for t in row[3].split()] if row[3] else []
        assert len(pts) == 2 * int(row[2])
        assert all(p % 2 != 0 for p in pts)

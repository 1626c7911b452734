"""Diagram combinatorics: Frobenius coordinates, hook dimensions, weights."""

import itertools
import math

import pytest

from detproc import partitions as pt
from detproc.errors import DomainError


def test_frobenius_empty():
    coords = pt.frobenius(pt.YoungDiagram())
    assert coords.d == 0
    assert coords.p == () and coords.q == ()


def test_frobenius_331_by_hand():
    # lambda = (3,3,1): conjugate (3,2,2), d = 2, p = (2,1), q = (2,0)
    coords = pt.frobenius(pt.YoungDiagram([3, 3, 1]))
    assert coords.p == (2, 1)
    assert coords.q == (2, 0)


def test_frobenius_roundtrip_exhaustive():
    for n in range(11):
        for lam in pt.enumerate_partitions(n):
            assert pt.from_frobenius(pt.frobenius(lam)) == lam


def test_size_identity():
    for n in range(9):
        for lam in pt.enumerate_partitions(n):
            coords = pt.frobenius(lam)
            assert lam.size == coords.d + sum(coords.p) + sum(coords.q)


def test_fr_config_examples():
    assert pt.fr_config(pt.YoungDiagram()) == frozenset()
    assert pt.fr_config(pt.YoungDiagram([3, 3, 1])) == frozenset({5, 3, -5, -1})
    assert pt.fr_config(pt.YoungDiagram([1])) == frozenset({1, -1})


def test_fr_config_balanced():
    for n in range(11):
        for lam in pt.enumerate_partitions(n):
            cfg = pt.fr_config(lam)
            assert sum(1 for p in cfg if p > 0) == sum(1 for p in cfg if p < 0)
            assert all(p % 2 != 0 for p in cfg)


def test_dim_hook_single_row_and_column():
    for n in range(1, 8):
        assert pt.dim_hook(pt.YoungDiagram([n])) == 1
        assert pt.dim_hook(pt.YoungDiagram([1] * n)) == 1


def test_dim_hook_21():
    assert pt.dim_hook(pt.YoungDiagram([2, 1])) == 2


def _count_syt(rows):
    """Brute-force count of standard Young tableaux by filling cells."""
    cells = [(i, j) for i, r in enumerate(rows) for j in range(r)]
    n = len(cells)
    count = 0
    for perm in itertools.permutations(range(1, n + 1)):
        grid = {}
        for cell, val in zip(cells, perm):
            grid[cell] = val
        ok = True
        for (i, j), val in grid.items():
            if (i, j + 1) in grid and grid[(i, j + 1)] < val:
                ok = False
                break
            if (i + 1, j) in grid and grid[(i + 1, j)] < val:
                ok = False
                break
        if ok:
            count += 1
    return count


def test_dim_hook_vs_enumeration():
    for rows in ([2, 2], [3, 1], [2, 1, 1], [3, 2], [2, 2, 1]):
        lam = pt.YoungDiagram(rows)
        assert pt.dim_hook(lam) == _count_syt(rows)


def test_plancherel_normalization():
    for n in range(7):
        total = sum(pt.dim_hook(lam) ** 2 for lam in pt.enumerate_partitions(n))
        assert total == math.factorial(n)


def test_plancherel_weight_examples():
    for theta in (0.5, 1.0, 3.0):
        assert pt.plancherel_weight(pt.YoungDiagram(), theta) == pytest.approx(
            math.exp(-theta), rel=1e-14)
    assert pt.plancherel_weight(pt.YoungDiagram([1]), 2.0) == pytest.approx(
        2.0 * math.exp(-2.0), rel=1e-14)


def test_plancherel_weight_sums_to_one():
    theta = 1.0
    total = sum(pt.plancherel_weight(lam, theta)
                for n in range(41) for lam in pt.enumerate_partitions(n))
    assert abs(total - 1.0) < 1e-12


def test_plancherel_weight_domain():
    with pytest.raises(DomainError):
        pt.plancherel_weight(pt.YoungDiagram([1]), 0.0)


def test_enumerate_counts_and_order():
    assert [lam.rows for lam in pt.enumerate_partitions(0)] == [()]
    assert len(pt.enumerate_partitions(4)) == 5
    assert len(pt.enumerate_partitions(10)) == 42
    # reverse-lexicographic order, largest first
    assert [lam.rows for lam in pt.enumerate_partitions(4)] == [
        (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_enumerate_limits():
    with pytest.raises(DomainError):
        pt.enumerate_partitions(41)
    with pytest.raises(DomainError):
        pt.enumerate_partitions(-1)


def test_young_diagram_validation():
    with pytest.raises(DomainError):
        pt.YoungDiagram([1, 2])
    with pytest.raises(DomainError):
        pt.YoungDiagram([2, 0])


def test_half_encoding():
    assert pt.half(1) == 0.5
    assert pt.half(-5) == -2.5
    with pytest.raises(DomainError):
        pt.half(2)

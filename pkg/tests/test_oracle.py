"""Brute-force subset oracle: profiles, summaries, limits."""

import random

import pytest

from nisets.families import FamilySpec, build
from nisets.graphs import build_graph
from nisets.oracle import edge_level_counts, oracle_profile, oracle_summary


def test_star_profile():
    g = build(FamilySpec("star", 4))
    profile = oracle_profile(g, 1)
    assert profile.by_size == (0, 0, 3, 0, 0)
    assert profile.sigma == 3


def test_edgeless_profile_is_zero():
    profile = oracle_profile(build_graph(5, []), 1)
    assert profile.by_size == (0,) * 6


def test_path4_profile():
    profile = oracle_profile(build(FamilySpec("path", 4)), 1)
    assert profile.by_size == (0, 0, 3, 2, 0)
    assert profile.sigma == 5 and profile.total == 12


def test_complete_summary():
    s = oracle_summary(build(FamilySpec("complete", 4)), 1)
    assert (s.sigma, s.total, s.average) == (6, 12, 2)


def test_edgeless_average_is_zero():
    for n in (1, 3, 6):
        s = oracle_summary(build_graph(n, []), 1)
        assert (s.sigma, s.total, s.average) == (0, 0, 0)


def test_edgeless_level_zero():
    s = oracle_summary(build_graph(4, []), 0)
    assert (s.sigma, s.total, s.average) == (16, 32, 2)


def test_profile_shape_invariants():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randrange(1, 9)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
        g = build_graph(n, edges)
        p0 = oracle_profile(g, 0)
        p1 = oracle_profile(g, 1)
        assert len(p0.by_size) == n + 1 and len(p1.by_size) == n + 1
        assert p0.by_size[0] == 1
        assert p1.by_size[0] == 0 and (n < 1 or p1.by_size[1] == 0)


def test_levels_partition_all_subsets():
    rng = random.Random(6)
    for _ in range(20):
        n = rng.randrange(1, 9)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        g = build_graph(n, edges)
        counts = edge_level_counts(g)
        assert sum(counts) == 1 << n
        for level, count in enumerate(counts):
            assert oracle_profile(g, level).sigma == count


def test_path_counts_follow_fibonacci():
    values = {}
    for n in range(0, 21):
        values[n] = oracle_profile(build(FamilySpec("path", n)), 0).sigma
    assert values[0] == 1 and values[1] == 2
    for n in range(2, 21):
        assert values[n] == values[n - 1] + values[n - 2]


def test_vectorized_and_loop_paths_agree():
    # n = 13 takes the vectorized branch, n = 12 the plain loop
    rng = random.Random(7)
    for n in (12, 13, 14):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.25]
        g = build_graph(n, edges)
        from nisets.oracle import _profile_loop, _profile_vectorized

        for level in (0, 1, 2):
            assert _profile_loop(g, level) == _profile_vectorized(g, level)


def test_order_limit():
    with pytest.raises(ValueError, match="oracle limit"):
        oracle_profile(build_graph(25, []), 1)


def test_negative_level_rejected():
    with pytest.raises(ValueError, match="non-negative"):
        oracle_profile(build_graph(3, []), -1)

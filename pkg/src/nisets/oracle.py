"""Brute-force ground truth: iterate all 2^n vertex subsets and count the
edges each one induces.

Deliberately independent of the recursive engine so the two can be checked
against each other.  Induced edges are counted by accumulating
|N(v) & S| over v in S and halving.  Orders above 24 are refused.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .engine import NisSummary
from .graphs import Graph, iter_bits

ORACLE_ORDER_LIMIT = 24
_VECTOR_THRESHOLD = 13  # below this the plain loop beats numpy call overhead
_CHUNK = 1 << 20


@dataclass(frozen=True)
class OracleProfile:
    """Counts of subsets inducing exactly ``induced_edges`` edges, by size."""

    induced_edges: int
    by_size: tuple[int, ...]

    @property
    def sigma(self) -> int:
        return sum(self.by_size)

    @property
    def total(self) -> int:
        return sum(k * c for k, c in enumerate(self.by_size))


def _check_order(g: Graph) -> None:
    if g.n > ORACLE_ORDER_LIMIT:
        raise ValueError(f"order {g.n} exceeds oracle limit ({ORACLE_ORDER_LIMIT})")


def oracle_profile(g: Graph, level: int) -> OracleProfile:
    """Exact per-size counts of subsets inducing exactly ``level`` edges."""
    _check_order(g)
    if level < 0:
        raise ValueError("induced-edge count must be non-negative")
    n = g.n
    if n < _VECTOR_THRESHOLD:
        counts = _profile_loop(g, level)
    else:
        counts = _profile_vectorized(g, level)
    return OracleProfile(level, tuple(counts))


def oracle_summary(g: Graph, level: int) -> NisSummary:
    """(count, size-sum, average) computed purely by subset enumeration."""
    profile = oracle_profile(g, level)
    return NisSummary.from_counts(profile.sigma, profile.total)


def _profile_loop(g: Graph, level: int) -> list[int]:
    n, adj = g.n, g.adj
    doubled = 2 * level
    counts = [0] * (n + 1)
    for s in range(1 << n):
        acc = 0
        rest = s
        while rest:
            low = rest & -rest
            acc += (adj[low.bit_length() - 1] & s).bit_count()
            rest ^= low
        if acc == doubled:
            counts[s.bit_count()] += 1
    return counts


def _profile_vectorized(g: Graph, level: int) -> list[int]:
    n, adj = g.n, g.adj
    doubled = 2 * level
    counts = np.zeros(n + 1, dtype=np.int64)
    total = 1 << n
    for start in range(0, total, _CHUNK):
        subsets = np.arange(start, min(start + _CHUNK, total), dtype=np.uint32)
        acc = np.zeros(subsets.shape, dtype=np.uint16)
        for v in range(n):
            has_v = ((subsets >> np.uint32(v)) & np.uint32(1)).astype(np.uint16)
            acc += np.bitwise_count(subsets & np.uint32(adj[v])).astype(np.uint16) * has_v
        sizes = np.bitwise_count(subsets).astype(np.int64)
        hit = acc == doubled
        counts += np.bincount(sizes[hit], minlength=n + 1)
    return counts.tolist()


def edge_level_counts(g: Graph) -> list[int]:
    """sigma_l for every induced-edge level l; the entries sum to 2^n."""
    _check_order(g)
    n, adj = g.n, g.adj
    out = [0] * (g.edge_count + 1)
    for s in range(1 << n):
        acc = 0
        for v in iter_bits(s):
            acc += (adj[v] & s).bit_count()
        out[acc // 2] += 1
    return out

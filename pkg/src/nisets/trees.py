"""Exhaustive generation of free trees, one per isomorphism class.

Trees are produced by the classic successor algorithm on canonical level
sequences of centre-rooted trees (constant amortized work per tree), so the
stream order is deterministic.  Two independent cross-checks live here as
well: a counting recurrence for the number of free trees, and a slow
labelled-tree oracle that decodes every length-(n-2) vertex sequence and
deduplicates the results by a canonical key.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .graphs import Graph, build_graph

TREE_ORDER_LIMIT = 24
SEQUENCE_ORACLE_LIMIT = 10  # n^(n-2) labelled trees; keep well clear of that wall


@dataclass(frozen=True)
class LevelSequence:
    """Depth sequence of a rooted tree in the canonical generation order."""

    levels: tuple[int, ...]

    def __post_init__(self):
        if not self.levels or self.levels[0] != 0:
            raise ValueError("level sequence must start at depth 0")
        for i in range(1, len(self.levels)):
            if not 1 <= self.levels[i] <= self.levels[i - 1] + 1:
                raise ValueError(f"invalid depth jump at position {i}")

    def to_graph(self) -> Graph:
        levels = self.levels
        edges = []
        stack: list[int] = []
        for i, depth in enumerate(levels):
            while stack and levels[stack[-1]] >= depth:
                stack.pop()
            if stack:
                edges.append((stack[-1], i))
            stack.append(i)
        return build_graph(len(levels), edges)


def _check_order(n: int) -> None:
    if not 1 <= n <= TREE_ORDER_LIMIT:
        raise ValueError(f"order outside supported range (1..{TREE_ORDER_LIMIT})")


def _successor_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    """Next canonical rooted-tree level sequence, or None after the last."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split_first_subtree(levels: list[int]) -> tuple[list[int], list[int]]:
    """(first root subtree re-rooted at depth 0, remainder incl. root)."""
    cut = len(levels)
    seen_one = False
    for i, depth in enumerate(levels):
        if depth == 1:
            if seen_one:
                cut = i
                break
            seen_one = True
    left = [levels[i] - 1 for i in range(1, cut)]
    rest = [0] + levels[cut:]
    return left, rest


def _advance_to_free(levels: list[int]) -> list[int] | None:
    """Accept ``levels`` when it encodes a centre-rooted free tree, else jump
    to the next sequence that does."""
    left, rest = _split_first_subtree(levels)
    left_height = max(left)
    rest_height = max(rest)
    valid = rest_height >= left_height
    if valid and rest_height == left_height:
        if len(left) > len(rest):
            valid = False
        elif len(left) == len(rest) and left > rest:
            valid = False
    if valid:
        return levels
    p = len(left)
    skipped = _successor_rooted(levels, p)
    if skipped is not None and levels[p] > 2:
        new_left, _ = _split_first_subtree(skipped)
        suffix = list(range(1, max(new_left) + 2))
        skipped[-len(suffix):] = suffix
    return skipped


def level_sequences(n: int):
    """Canonical level sequences of all free trees of order n, in stream order."""
    _check_order(n)
    if n == 1:
        yield LevelSequence((0,))
        return
    if n == 2:
        yield LevelSequence((0, 1))
        return
    layout: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _advance_to_free(layout)
        if layout is None:
            break
        yield LevelSequence(tuple(layout))
        layout = _successor_rooted(layout)


def free_trees(n: int):
    """All free trees of order n, exactly once up to isomorphism."""
    for seq in level_sequences(n):
        yield seq.to_graph()


@lru_cache(maxsize=None)
def _rooted_tree_count(n: int) -> int:
    if n < 2:
        return n
    value = 0
    for j in range(1, n):
        for d in range(1, n):
            if j % d == 0:
                value += d * _rooted_tree_count(d) * _rooted_tree_count(n - j)
    return value // (n - 1)


def count_free_trees(n: int) -> int:
    """Number of free trees of order n (matches the stream's cardinality)."""
    _check_order(n)
    paired = sum(_rooted_tree_count(k) * _rooted_tree_count(n - k) for k in range(n + 1))
    if n % 2 == 0:
        paired -= _rooted_tree_count(n // 2)
    return _rooted_tree_count(n) - paired // 2


# -- labelled-tree oracle ------------------------------------------------------


def sequence_to_adjacency(seq: tuple[int, ...], n: int) -> list[list[int]]:
    """Decode a length-(n-2) vertex sequence into tree adjacency lists.

    Smallest-leaf elimination with a monotone pointer; consumed leaves are
    zeroed out so the sweeps never revisit them.
    """
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    adj: list[list[int]] = [[] for _ in range(n)]
    ptr = 0
    leaf = -1
    for x in seq:
        if leaf < 0:
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
            ptr += 1
        adj[leaf].append(x)
        adj[x].append(leaf)
        degree[leaf] = 0
        degree[x] -= 1
        # a vertex below the pointer that just became a leaf would otherwise
        # never be swept again, so it must be taken immediately
        leaf = x if degree[x] == 1 and x < ptr else -1
    if leaf < 0:
        while degree[ptr] != 1:
            ptr += 1
        leaf = ptr
    degree[leaf] = 0
    last = 0
    while degree[last] != 1:
        last += 1
    adj[leaf].append(last)
    adj[last].append(leaf)
    return adj


def _centers(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    if n <= 2:
        return list(range(n))
    degree = [len(a) for a in adj]
    layer = [v for v in range(n) if degree[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in adj[v]:
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
        layer = nxt
    return layer


def _rooted_key(adj: list[list[int]], root: int) -> str:
    # iterative post-order; children keys sorted to canonicalize
    key: dict[int, str] = {}
    stack = [(root, -1, False)]
    while stack:
        v, parent, expanded = stack.pop()
        if expanded:
            parts = sorted(key[u] for u in adj[v] if u != parent)
            key[v] = "(" + "".join(parts) + ")"
        else:
            stack.append((v, parent, True))
            for u in adj[v]:
                if u != parent:
                    stack.append((u, v, False))
    return key[root]


def tree_canonical_key(g: Graph) -> str:
    """Isomorphism-complete canonical key for trees of any supported order."""
    adj = [[u for u in range(g.n) if g.adj[v] >> u & 1] for v in range(g.n)]
    if g.n == 0:
        raise ValueError("canonical key undefined for the empty graph")
    return min(_rooted_key(adj, c) for c in _centers(adj))


def labelled_tree_classes(n: int) -> int:
    """Count of isomorphism classes among all n^(n-2) labelled trees.

    Every vertex sequence of length n-2 is decoded and the resulting trees
    are deduplicated by canonical key; completely independent of the level
    sequence generator.  Exponential: refuse orders above
    ``SEQUENCE_ORACLE_LIMIT``.
    """
    if not 1 <= n <= SEQUENCE_ORACLE_LIMIT:
        raise ValueError(f"labelled-tree oracle limited to 1..{SEQUENCE_ORACLE_LIMIT}")
    if n <= 2:
        return 1
    keys = set()
    for seq in product(range(n), repeat=n - 2):
        adj = sequence_to_adjacency(seq, n)
        keys.add(min(_rooted_key(adj, c) for c in _centers(adj)))
    return len(keys)

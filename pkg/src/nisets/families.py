"""Named graph families with closed-form counts, used as regression anchors.

Families: edgeless, star, complete, path, cycle, the subdivided star R
(a star with one edge subdivided once) and G_special (a single edge plus
isolated vertices).  Closed forms are evaluated with exact integers; path
values come from the two-term linear recurrences rather than any
floating-point shortcut.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .engine import Engine, NisSummary
from .graphs import Graph, build_graph

FAMILY_MIN_ORDER = {
    "edgeless": 0,
    "star": 1,
    "complete": 1,
    "path": 0,
    "cycle": 3,
    "R": 4,
    "G_special": 3,
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILY_MIN_ORDER:
            raise ValueError(f"unknown family {self.family!r}")
        low = FAMILY_MIN_ORDER[self.family]
        if self.n < low:
            raise ValueError(f"family {self.family!r} requires order >= {low}")


def build(spec: FamilySpec) -> Graph:
    """Construct the named graph with its documented labelling."""
    n = spec.n
    if spec.family == "edgeless":
        return build_graph(n, [])
    if spec.family == "star":
        return build_graph(n, [(0, v) for v in range(1, n)])
    if spec.family == "complete":
        return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if spec.family == "path":
        return build_graph(n, [(v, v + 1) for v in range(n - 1)])
    if spec.family == "cycle":
        return build_graph(n, [(v, (v + 1) % n) for v in range(n)])
    if spec.family == "R":
        # 0 = hub, 1..n-3 = hub leaves, n-2 = subdivision vertex, n-1 = new leaf
        edges = [(0, v) for v in range(1, n - 2)]
        edges += [(0, n - 2), (n - 2, n - 1)]
        return build_graph(n, edges)
    # G_special: one edge plus n-2 isolated vertices
    return build_graph(n, [(0, 1)])


def _path_scalar_tables(n: int):
    """(sigma0, s0, sigma1, s1) of paths of order 0..n via linear recurrences."""
    sigma0 = [1, 2]
    s0 = [0, 1]
    for k in range(2, n + 1):
        sigma0.append(sigma0[k - 1] + sigma0[k - 2])
        s0.append(s0[k - 1] + s0[k - 2] + sigma0[k - 2])
    sigma0 = sigma0[: n + 1]
    s0 = s0[: n + 1]

    def p0(k):  # order -1 is the empty graph
        return 1 if k < 0 else sigma0[k]

    def t0(k):
        return 0 if k < 0 else s0[k]

    sigma1 = [0] * (n + 1)
    s1 = [0] * (n + 1)
    for k in range(2, n + 1):
        sig = 0
        tot = 0
        for j in range(1, k):
            a, b = j - 2, k - 2 - j
            us = p0(a) * p0(b)
            ut = t0(a) * p0(b) + p0(a) * t0(b)
            sig += us
            tot += 2 * us + ut
        sigma1[k] = sig
        s1[k] = tot
    return sigma0, s0, sigma1, s1


def closed_form_summary(spec: FamilySpec, level: int) -> NisSummary:
    """Exact (count, size-sum, average) from the family's closed form.

    Cycles have no closed form here; compute them through the engine.
    """
    if level not in (0, 1):
        raise ValueError(f"no closed form for family {spec.family!r} at level {level}")
    n = spec.n
    family = spec.family
    if family == "edgeless":
        if level == 0:
            return NisSummary.from_counts(1 << n, n << (n - 1) if n else 0)
        return NisSummary.from_counts(0, 0)
    if family == "star":
        if level == 0:
            if n == 1:
                return NisSummary.from_counts(2, 1)
            return NisSummary.from_counts((1 << (n - 1)) + 1, (n - 1) * (1 << (n - 2)) + 1)
        return NisSummary.from_counts(n - 1, 2 * (n - 1))
    if family == "complete":
        if level == 0:
            return NisSummary.from_counts(n + 1, n)
        return NisSummary.from_counts(n * (n - 1) // 2, n * (n - 1))
    if family == "path":
        sigma0, s0, sigma1, s1 = _path_scalar_tables(n)
        if level == 0:
            return NisSummary.from_counts(sigma0[n], s0[n])
        return NisSummary.from_counts(sigma1[n], s1[n])
    if family == "R":
        if level == 0:
            sigma = 3 * (1 << (n - 3)) + 2
            total = 3 * (n - 3) * (1 << (n - 4)) + (1 << (n - 2)) + 3
            return NisSummary.from_counts(sigma, total)
        sigma = 2 * n - 5 + (1 << (n - 3))
        total = 5 * n - 13 + (n + 1) * (1 << (n - 4))
        return NisSummary.from_counts(sigma, total)
    if family == "G_special":
        if level == 0:
            sigma = 3 << (n - 2)
            total = (1 << (n - 1)) + 3 * (n - 2) * (1 << (n - 3))
            return NisSummary.from_counts(sigma, total)
        sigma = 1 << (n - 2)
        total = (1 << (n - 1)) + (n - 2) * (1 << (n - 3))
        return NisSummary.from_counts(sigma, total)
    raise ValueError(f"no closed form for family {family!r}; use the engine")


_RATIO_TABLE = (
    ("P5", ("path", 5), Fraction(10, 13)),
    ("C4", ("cycle", 4), Fraction(4, 7)),
    ("P4", ("path", 4), Fraction(5, 8)),
    ("C3", ("cycle", 3), Fraction(3, 4)),
    ("P3", ("path", 3), Fraction(2, 5)),
    ("P2", ("path", 2), Fraction(1, 3)),
)


def ratio_table() -> list[tuple[str, Fraction]]:
    """Known one-edge/zero-edge count ratios for small paths and cycles.

    Each ratio is recomputed by the engine and checked against the expected
    exact value before it is returned.
    """
    out = []
    for name, (family, n), expected in _RATIO_TABLE:
        eng = Engine(build(FamilySpec(family, n)))
        sigma1, _ = eng.scalars1()
        sigma0, _ = eng.scalars0()
        got = Fraction(sigma1, sigma0)
        if got != expected:
            raise AssertionError(f"ratio for {name}: engine got {got}, expected {expected}")
        out.append((name, got))
    return out

"""Exact counting of vertex subsets inducing zero or one edge.

Counts are carried either as generating polynomials in the subset size
(coefficient k = number of qualifying subsets of cardinality k) or as the
scalar pair (count, size-sum).  Both are computed by memoized recursion on
vertex masks over an immutable root graph, along two structurally different
decompositions whose agreement is cross-checked by the test suite:

* removing a pivot vertex, its closed neighbourhood, or the pivot together
  with one neighbour and both neighbourhoods;
* summing, over all edges, the independent-set polynomial of the graph left
  after deleting both endpoints' neighbourhoods.

All arithmetic is exact: Python integers for counts, fractions for
averages.  The average of an empty family is 0 by convention, with the
zero count kept visible so callers can distinguish the two situations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, iter_bits

Poly = tuple  # coefficient tuple, no trailing zeros; () is the zero polynomial

_ZERO: Poly = ()
_ONE: Poly = (1,)


def poly_add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return tuple(out)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return _ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return tuple(out)


def poly_shift(a: Poly, k: int) -> Poly:
    return ((0,) * k + a) if a else _ZERO


@dataclass(frozen=True)
class CountPolynomial:
    """Generating polynomial of qualifying subsets by cardinality."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.coeffs):
            raise ValueError("count polynomial cannot have negative coefficients")
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("count polynomial must not carry trailing zeros")

    @classmethod
    def from_coeffs(cls, coeffs) -> "CountPolynomial":
        out = list(coeffs)
        while out and out[-1] == 0:
            out.pop()
        return cls(tuple(out))

    @property
    def sigma(self) -> int:
        """Value at 1: the number of qualifying subsets."""
        return sum(self.coeffs)

    @property
    def size_sum(self) -> int:
        """Derivative at 1: the total size over qualifying subsets."""
        return sum(k * c for k, c in enumerate(self.coeffs))

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs


@dataclass(frozen=True)
class NisSummary:
    """(count, size-sum, average) of a family of vertex subsets."""

    sigma: int
    total: int
    average: Fraction

    @classmethod
    def from_counts(cls, sigma: int, total: int) -> "NisSummary":
        avg = Fraction(total, sigma) if sigma else Fraction(0)
        return cls(sigma, total, avg)


def format_rational(value: Fraction | int) -> str:
    """Lowest-terms display: bare integers stay bare, otherwise ``p/q``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def summarize(p: CountPolynomial) -> NisSummary:
    return NisSummary.from_counts(p.sigma, p.size_sum)


@dataclass(frozen=True)
class EdgeTerm:
    """Per-edge contribution to the one-edge-subset average.

    ``residual_mask`` is the vertex set remaining after deleting both
    endpoints' neighbourhoods (endpoints included); sigma0/s0 count the
    independent sets of that residual graph and their total size.  The
    weights over all edges of a graph sum to 1.
    """

    edge: tuple[int, int]
    residual_mask: int
    sigma0: int
    s0: int
    weight: Fraction
    union_size: int
    closed_size_u: int
    closed_size_v: int

    @property
    def av0(self) -> Fraction:
        return Fraction(self.s0, self.sigma0)


class Engine:
    """Memoized evaluator bound to one root graph.

    All recursion state lives in per-mask caches shared between the
    zero-edge and one-edge computations; entries are deterministic, so the
    caches can be rebuilt or merged freely.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        self._adj = graph.adj
        self._full = graph.universe
        self._p0: dict[int, Poly] = {0: _ONE}
        self._p1: dict[int, Poly] = {0: _ZERO}
        self._sc0: dict[int, tuple[int, int]] = {0: (1, 0)}
        self._sc1: dict[int, tuple[int, int]] = {0: (0, 0)}

    # -- mask utilities ----------------------------------------------------

    def _split(self, mask: int) -> tuple[int, list[int]]:
        """(count of isolated vertices, component masks of the rest)."""
        adj = self._adj
        iso = 0
        rest = mask
        for v in iter_bits(mask):
            if not adj[v] & mask:
                iso += 1
                rest &= ~(1 << v)
        comps = []
        while rest:
            comp = rest & -rest
            frontier = comp
            while frontier:
                grow = 0
                for v in iter_bits(frontier):
                    grow |= adj[v]
                frontier = grow & rest & ~comp
                comp |= frontier
            comps.append(comp)
            rest &= ~comp
        return iso, comps

    def _pivot(self, mask: int) -> int:
        """Vertex of maximum degree inside ``mask``, lowest index on ties."""
        adj = self._adj
        best_v = -1
        best_d = -1
        for v in iter_bits(mask):
            d = (adj[v] & mask).bit_count()
            if d > best_d:
                best_d = d
                best_v = v
        return best_v

    # -- zero-edge (independent set) polynomials ----------------------------

    def i0(self, mask: int | None = None) -> Poly:
        if mask is None:
            mask = self._full
        memo = self._p0
        got = memo.get(mask)
        if got is not None:
            return got
        iso, comps = self._split(mask)
        if iso or len(comps) != 1:
            out = _binomial_poly(iso)
            for c in comps:
                out = poly_mul(out, self.i0(c))
        else:
            v = self._pivot(mask)
            closed = self._adj[v] | (1 << v)
            out = poly_add(
                self.i0(mask & ~(1 << v)),
                poly_shift(self.i0(mask & ~closed), 1),
            )
        memo[mask] = out
        return out

    # -- one-edge polynomials, pivot-vertex route ----------------------------

    def i1(self, mask: int | None = None) -> Poly:
        if mask is None:
            mask = self._full
        memo = self._p1
        got = memo.get(mask)
        if got is not None:
            return got
        adj = self._adj
        iso, comps = self._split(mask)
        if iso or len(comps) != 1:
            acc0 = _binomial_poly(iso)
            acc1 = _ZERO
            for c in comps:
                c0 = self.i0(c)
                c1 = self.i1(c)
                acc1 = poly_add(poly_mul(acc1, c0), poly_mul(acc0, c1))
                acc0 = poly_mul(acc0, c0)
            out = acc1
        else:
            v = self._pivot(mask)
            closed = adj[v] | (1 << v)
            out = poly_add(
                self.i1(mask & ~(1 << v)),
                poly_shift(self.i1(mask & ~closed), 1),
            )
            for u in iter_bits(adj[v] & mask):
                residual = mask & ~(adj[v] | adj[u])
                out = poly_add(out, poly_shift(self.i0(residual), 2))
        memo[mask] = out
        return out

    # -- one-edge polynomial, per-edge route ---------------------------------

    def i1_by_edges(self, mask: int | None = None) -> Poly:
        if mask is None:
            mask = self._full
        adj = self._adj
        out = _ZERO
        for u in iter_bits(mask):
            above_u = mask & ~((1 << (u + 1)) - 1)
            for v in iter_bits(adj[u] & above_u):
                residual = mask & ~(adj[u] | adj[v])
                out = poly_add(out, self.i0(residual))
        return poly_shift(out, 2)

    # -- scalar route (independent of the polynomial arithmetic) -------------

    def scalars0(self, mask: int | None = None) -> tuple[int, int]:
        """(count, size-sum) over subsets of ``mask`` inducing no edge."""
        if mask is None:
            mask = self._full
        memo = self._sc0
        got = memo.get(mask)
        if got is not None:
            return got
        iso, comps = self._split(mask)
        if iso or len(comps) != 1:
            sig, tot = _edgeless_scalars(iso)
            for c in comps:
                cs, ct = self.scalars0(c)
                tot = tot * cs + sig * ct
                sig = sig * cs
            out = (sig, tot)
        else:
            v = self._pivot(mask)
            closed = self._adj[v] | (1 << v)
            s_a, t_a = self.scalars0(mask & ~(1 << v))
            s_b, t_b = self.scalars0(mask & ~closed)
            out = (s_a + s_b, t_a + t_b + s_b)
        memo[mask] = out
        return out

    def scalars1(self, mask: int | None = None) -> tuple[int, int]:
        """(count, size-sum) over subsets of ``mask`` inducing one edge."""
        if mask is None:
            mask = self._full
        memo = self._sc1
        got = memo.get(mask)
        if got is not None:
            return got
        adj = self._adj
        iso, comps = self._split(mask)
        if iso or len(comps) != 1:
            sig0, tot0 = _edgeless_scalars(iso)
            sig1, tot1 = 0, 0
            for c in comps:
                cs0, ct0 = self.scalars0(c)
                cs1, ct1 = self.scalars1(c)
                tot1 = tot1 * cs0 + sig1 * ct0 + ct1 * sig0 + cs1 * tot0
                sig1 = sig1 * cs0 + sig0 * cs1
                tot0 = tot0 * cs0 + sig0 * ct0
                sig0 = sig0 * cs0
            out = (sig1, tot1)
        else:
            v = self._pivot(mask)
            closed = adj[v] | (1 << v)
            s_a, t_a = self.scalars1(mask & ~(1 << v))
            s_b, t_b = self.scalars1(mask & ~closed)
            sig = s_a + s_b
            tot = t_a + s_b + t_b
            for u in iter_bits(adj[v] & mask):
                residual = mask & ~(adj[v] | adj[u])
                rs, rt = self.scalars0(residual)
                sig += rs
                tot += 2 * rs + rt
            out = (sig, tot)
        memo[mask] = out
        return out

    # -- per-edge statistics --------------------------------------------------

    def edge_terms(self) -> list[EdgeTerm]:
        g = self.graph
        edges = g.edges()
        if not edges:
            raise ValueError("edge terms undefined for edgeless graph")
        adj = self._adj
        raw = []
        for u, v in edges:
            union = adj[u] | adj[v]
            residual = self._full & ~union
            rs, rt = self.scalars0(residual)
            raw.append((u, v, residual, rs, rt, union.bit_count()))
        denom = sum(rs for *_, rs, _rt, _l in raw)
        terms = []
        for u, v, residual, rs, rt, union_size in raw:
            terms.append(
                EdgeTerm(
                    edge=(u, v),
                    residual_mask=residual,
                    sigma0=rs,
                    s0=rt,
                    weight=Fraction(rs, denom),
                    union_size=union_size,
                    closed_size_u=g.degree(u) + 1,
                    closed_size_v=g.degree(v) + 1,
                )
            )
        return terms


def _binomial_poly(k: int) -> Poly:
    """Independent-set polynomial of k isolated vertices: (1 + x)^k."""
    row = [1]
    for _ in range(k):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return tuple(row)


def _edgeless_scalars(k: int) -> tuple[int, int]:
    """(count, size-sum) of all subsets of k isolated vertices."""
    return (1 << k, k << (k - 1) if k else 0)


# -- public graph-level operations ------------------------------------------


def i0_polynomial(g: Graph) -> CountPolynomial:
    """Independent-set polynomial (subsets inducing no edge, by size)."""
    return CountPolynomial.from_coeffs(Engine(g).i0())


def i1_vertex_recursion(g: Graph) -> CountPolynomial:
    """One-edge-subset polynomial via the pivot-vertex decomposition."""
    return CountPolynomial.from_coeffs(Engine(g).i1())


def i1_edge_decomposition(g: Graph) -> CountPolynomial:
    """One-edge-subset polynomial via the per-edge decomposition."""
    return CountPolynomial.from_coeffs(Engine(g).i1_by_edges())


def union_combine(
    p1_zero: CountPolynomial,
    p1_one: CountPolynomial,
    p2_zero: CountPolynomial,
    p2_one: CountPolynomial,
) -> tuple[CountPolynomial, CountPolynomial]:
    """Polynomials of a disjoint union from the parts' polynomials.

    Zero-edge subsets multiply; a one-edge subset places its edge in one
    part and an independent set in the other.
    """
    zero = poly_mul(p1_zero.coeffs, p2_zero.coeffs)
    one = poly_add(
        poly_mul(p1_one.coeffs, p2_zero.coeffs),
        poly_mul(p2_one.coeffs, p1_zero.coeffs),
    )
    return CountPolynomial.from_coeffs(zero), CountPolynomial.from_coeffs(one)


def nis_summary(g: Graph, level: int) -> NisSummary:
    """(count, size-sum, average) for subsets inducing exactly ``level`` edges."""
    if level not in (0, 1):
        raise ValueError("summaries are implemented for levels 0 and 1 only")
    eng = Engine(g)
    sig, tot = eng.scalars0() if level == 0 else eng.scalars1()
    return NisSummary.from_counts(sig, tot)


def s1_vertex_recursion(g: Graph) -> NisSummary:
    """One-edge summary via the scalar recursion (no polynomial arithmetic)."""
    sig, tot = Engine(g).scalars1()
    return NisSummary.from_counts(sig, tot)


def av1_edge(g: Graph, edge: tuple[int, int]) -> Fraction:
    """Average size of one-edge subsets whose edge is the given one.

    Equals 2 plus the independent-set average of the graph left after
    removing both endpoints' neighbourhoods.
    """
    u, v = edge
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge of the graph")
    eng = Engine(g)
    residual = g.universe & ~(g.adj[u] | g.adj[v])
    rs, rt = eng.scalars0(residual)
    return 2 + Fraction(rt, rs)


def edge_terms(g: Graph) -> list[EdgeTerm]:
    """Per-edge residual statistics; weights sum to 1.

    The weighted residual averages reconstruct the global one-edge average
    as 2 + sum(weight * av0).
    """
    return Engine(g).edge_terms()

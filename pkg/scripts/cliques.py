"""Exact s-clique counting on bit-vector graphs."""

import math
from typing import Optional, Sequence

from scripts.errors import ArgumentError, CapacityError
from scripts.graph_core import Graph, VertexSet

# Exact, nonnegative number of s-cliques.
CliqueCount = int

# Counts are kept inside a signed 64-bit range.
COUNT_LIMIT = 1 << 63


def _check_capacity(n: int, s: int) -> None:
    if math.comb(n, s) > COUNT_LIMIT:
        raise CapacityError(f"C({n}, {s}) exceeds 2^63; clique count may not fit 64 bits")


def _count_in(adj: Sequence[int], cand: int, r: int) -> int:
    """r-cliques inside cand, extending upward from each pivot in vertex order."""
    if r == 0:
        return 1
    if r == 1:
        return cand.bit_count()
    total = 0
    while cand.bit_count() >= r:
        low = cand & -cand
        cand ^= low
        rest = cand & adj[low.bit_length() - 1]
        if rest.bit_count() >= r - 1:
            total += _count_in(adj, rest, r - 1)
    return total


def _find_clique(adj: Sequence[int], cand: int, r: int) -> Optional[int]:
    if r == 0:
        return 0
    while cand.bit_count() >= r:
        low = cand & -cand
        cand ^= low
        found = _find_clique(adj, cand & adj[low.bit_length() - 1], r - 1)
        if found is not None:
            return found | low
    return None


def count_cliques(g: Graph, s: int) -> CliqueCount:
    """Number of s-vertex subsets of g inducing a complete graph."""
    if s < 0:
        raise ArgumentError(f"clique size must be nonnegative, got {s}")
    if s > g.order:
        return 0
    _check_capacity(g.order, s)
    return _count_in(g.adj, g.vertices, s)


def count_cliques_through(g: Graph, s: int, roots: VertexSet) -> CliqueCount:
    """Number of s-cliques whose vertex set contains every vertex of roots."""
    if roots & ~g.vertices:
        raise ArgumentError("roots reach beyond the graph order")
    r = roots.bit_count()
    if s < r:
        raise ArgumentError(f"clique size {s} is smaller than the {r} prescribed roots")
    common = g.vertices & ~roots
    bits = roots
    while bits:
        low = bits & -bits
        bits ^= low
        row = g.adj[low.bit_length() - 1]
        if (roots & ~low) & ~row:
            return 0
        common &= row
    _check_capacity(g.order - r, s - r)
    return _count_in(g.adj, common, s - r)


def clique_support(g: Graph, s: int) -> VertexSet:
    """Vertices lying in at least one s-clique."""
    if s < 1:
        raise ArgumentError(f"clique size must be at least 1, got {s}")
    if s == 1:
        return g.vertices
    support = 0
    for v in range(g.order):
        if (support >> v) & 1:
            continue
        found = _find_clique(g.adj, g.adj[v], s - 1)
        if found is not None:
            support |= found | (1 << v)
    return support

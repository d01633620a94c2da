#!/usr/bin/env python
"""
Vertex-disjoint packings of a small connected pattern H.

P3 (the path on three vertices) gets a dedicated branch-and-bound; any other
pattern goes through a generic embedding search with memoised failures.
Copies are subgraphs, not induced subgraphs: a triangle hosts a P3.
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from scripts.errors import ArgumentError, CapacityError, SizeError
from scripts.graph_core import (
    Graph,
    canonical_label,
    graph6_decode,
    is_connected,
    make_complete,
    members,
)

MAX_PATTERN_ORDER = 10
MAX_GENERAL_K = 6

# Maximum number of pairwise vertex-disjoint copies of a pattern.
PackingNumber = int


@dataclass(frozen=True)
class PatternGraph:
    """A connected forbidden unit H with 1 <= order <= 10."""

    graph: Graph
    name: str = ""

    def __post_init__(self):
        if not 1 <= self.graph.order <= MAX_PATTERN_ORDER:
            raise SizeError(f"pattern order {self.graph.order} outside [1, {MAX_PATTERN_ORDER}]")
        if not is_connected(self.graph):
            raise ArgumentError("pattern graph must be connected")

    @property
    def order(self) -> int:
        return self.graph.order

    @property
    def pattern_id(self) -> str:
        """Canonical graph6 of H; identical for isomorphic patterns."""
        return canonical_label(self.graph).decode("ascii")

    def is_p3(self) -> bool:
        # The only connected graph on 3 vertices with 2 edges.
        return self.graph.order == 3 and self.graph.edge_count == 2

    def display_name(self) -> str:
        return self.name or self.pattern_id


def path_pattern(m: int) -> PatternGraph:
    return PatternGraph(Graph.from_edges(m, [(i, i + 1) for i in range(m - 1)]), name=f"P{m}")


def p3_pattern() -> PatternGraph:
    return path_pattern(3)


def complete_pattern(m: int) -> PatternGraph:
    return PatternGraph(make_complete(m), name=f"K{m}")


def cycle_pattern(m: int) -> PatternGraph:
    if m < 3:
        raise ArgumentError(f"cycles need at least 3 vertices, got {m}")
    return PatternGraph(Graph.from_edges(m, [(i, (i + 1) % m) for i in range(m)]), name=f"C{m}")


def pattern_from_graph6(data) -> PatternGraph:
    graph = graph6_decode(data)
    name = data.decode("ascii") if isinstance(data, bytes) else str(data)
    return PatternGraph(graph, name=name.strip())


# --- P3 branch and bound --------------------------------------------------


def _usable(adj: Sequence[int], avail: int) -> int:
    """Vertices of avail lying on some P3 inside G[avail]."""
    out = 0
    bits = avail
    while bits:
        low = bits & -bits
        bits ^= low
        nv = adj[low.bit_length() - 1] & avail
        if nv.bit_count() >= 2:
            out |= low
        elif nv and (adj[nv.bit_length() - 1] & avail).bit_count() >= 2:
            out |= low
    return out


def _p3_triples(adj: Sequence[int], avail: int, v: int) -> List[int]:
    """Vertex sets of the P3 copies through v: v as center first, then v as an end."""
    vbit = 1 << v
    nv = members(adj[v] & avail)
    seen: Set[int] = set()
    out = []
    for i, a in enumerate(nv):
        for b in nv[i + 1:]:
            t = vbit | (1 << a) | (1 << b)
            if t not in seen:
                seen.add(t)
                out.append(t)
    for u in nv:
        for w in members(adj[u] & avail & ~vbit):
            t = vbit | (1 << u) | (1 << w)
            if t not in seen:
                seen.add(t)
                out.append(t)
    return out


class _P3Packer:
    """Branch on the lowest usable vertex: each P3 through it, or discard it."""

    def __init__(self, adj: Sequence[int], target: Optional[int] = None):
        self.adj = adj
        self.target = target
        self.best = 0
        self.stop_at = 0

    def greedy(self, avail: int) -> int:
        count = 0
        while True:
            avail = _usable(self.adj, avail)
            if not avail:
                return count
            v = (avail & -avail).bit_length() - 1
            avail &= ~_p3_triples(self.adj, avail, v)[0]
            count += 1

    def solve(self, avail: int) -> PackingNumber:
        avail = _usable(self.adj, avail)
        ceiling = avail.bit_count() // 3
        self.stop_at = ceiling if self.target is None else min(ceiling, self.target)
        self.best = self.greedy(avail)
        if self.best < self.stop_at:
            self._branch(avail, 0)
        return self.best

    def _branch(self, avail: int, count: int) -> bool:
        avail = _usable(self.adj, avail)
        if count > self.best:
            self.best = count
            if self.best >= self.stop_at:
                return True
        if count + avail.bit_count() // 3 <= self.best:
            return False
        low = avail & -avail
        for t in _p3_triples(self.adj, avail, low.bit_length() - 1):
            if self._branch(avail & ~t, count + 1):
                return True
        return self._branch(avail ^ low, count)


def max_p3_packing(g: Graph) -> PackingNumber:
    """Maximum number of vertex-disjoint P3 subgraphs of g."""
    return _P3Packer(g.adj).solve(g.vertices)


# --- general patterns -----------------------------------------------------


class _Embedder:
    """Backtracking embeddings of a connected pattern, in BFS order from a start vertex."""

    def __init__(self, h: Graph):
        self.h = h
        self.degrees = [h.degree(p) for p in range(h.order)]
        self._plans: Dict[int, Tuple[List[int], List[List[int]]]] = {}

    def plan(self, start: int) -> Tuple[List[int], List[List[int]]]:
        if start not in self._plans:
            order = [start]
            placed = 1 << start
            i = 0
            while i < len(order):
                for q in members(self.h.adj[order[i]] & ~placed):
                    order.append(q)
                    placed |= 1 << q
                i += 1
            position = {p: i for i, p in enumerate(order)}
            back = [[position[q] for q in members(self.h.adj[p]) if position[q] < i] for i, p in enumerate(order)]
            self._plans[start] = (order, back)
        return self._plans[start]

    def embeddings(self, adj: Sequence[int], avail: int, start: int, image: int) -> Iterator[int]:
        """Vertex masks of embeddings inside G[avail] mapping pattern vertex start to image."""
        order, back = self.plan(start)
        if (adj[image] & avail).bit_count() < self.degrees[start]:
            return
        images = [0] * len(order)
        images[0] = image
        yield from self._extend(adj, avail, order, back, images, 1 << image, 1)

    def _extend(self, adj, avail, order, back, images, used, i) -> Iterator[int]:
        if i == len(order):
            yield used
            return
        cand = avail & ~used
        for j in back[i]:
            cand &= adj[images[j]]
        need = self.degrees[order[i]]
        for x in members(cand):
            if (adj[x] & avail).bit_count() < need:
                continue
            images[i] = x
            yield from self._extend(adj, avail, order, back, images, used | (1 << x), i + 1)


def contains_subgraph(g: Graph, h: PatternGraph) -> bool:
    """True iff h embeds into g as a (not necessarily induced) subgraph."""
    if h.order > g.order:
        return False
    embedder = _Embedder(h.graph)
    start = max(range(h.order), key=lambda p: (embedder.degrees[p], -p))
    for x in range(g.order):
        for _ in embedder.embeddings(g.adj, g.vertices, start, x):
            return True
    return False


class _CopySearch:
    """Find k disjoint copies: the lowest available vertex is either skipped or covered."""

    def __init__(self, g: Graph, h: PatternGraph):
        self.adj = g.adj
        self.m = h.order
        self.embedder = _Embedder(h.graph)
        self.failed: Set[Tuple[int, int]] = set()

    def copies_through(self, avail: int, v: int) -> List[int]:
        masks: Set[int] = set()
        for p in range(self.m):
            masks.update(self.embedder.embeddings(self.adj, avail, p, v))
        return sorted(masks)

    def search(self, avail: int, remaining: int) -> bool:
        if remaining == 0:
            return True
        if avail.bit_count() < remaining * self.m:
            return False
        key = (avail, remaining)
        if key in self.failed:
            return False
        low = avail & -avail
        for mask in self.copies_through(avail, low.bit_length() - 1):
            if self.search(avail & ~mask, remaining - 1):
                return True
        if self.search(avail ^ low, remaining):
            return True
        self.failed.add(key)
        return False


def check_packing_caps(h: PatternGraph, k: int) -> None:
    """Raise CapacityError when the generic packing search would be refused."""
    if not h.is_p3() and k > MAX_GENERAL_K:
        raise CapacityError(f"packing of {k} copies of a general pattern exceeds the cap of {MAX_GENERAL_K}")


def has_k_disjoint(g: Graph, h: PatternGraph, k: int) -> bool:
    """True iff g holds k pairwise vertex-disjoint copies of h."""
    if k < 0:
        raise ArgumentError(f"number of copies must be nonnegative, got {k}")
    if k == 0:
        return True
    check_packing_caps(h, k)
    if g.order < k * h.order:
        return False
    if h.is_p3():
        return _P3Packer(g.adj, target=k).solve(g.vertices) >= k
    if k == 1:
        return contains_subgraph(g, h)
    return _CopySearch(g, h).search(g.vertices, k)


def is_k_free(g: Graph, h: PatternGraph, k: int) -> bool:
    """True iff g contains no k vertex-disjoint copies of h."""
    return not has_k_disjoint(g, h, k)

#!/usr/bin/env python
"""
Isomorph-free exhaustive search for ex(n, K_s, kH).

Graphs are generated by canonical edge augmentation from the edgeless graph:
a child G + e is accepted iff e lies in the automorphism orbit of the
canonical edge of G + e. The canonical edge is taken among the edges with the
largest (degree, degree, common neighbours) key, so most children are
rejected before any labelling, and none is labelled unless keep holds for
it. Each isomorphism class of kept graphs is therefore visited exactly once,
provided keep is subgraph-closed.
"""

import logging
import math
import time
from functools import lru_cache
from multiprocessing import Pool
from typing import Callable, Iterable, List, Optional, Set, Tuple

from pydantic import BaseModel
from tqdm import tqdm

from scripts import settings
from scripts.cliques import count_cliques
from scripts.errors import ArgumentError, CapacityError, EnumerationCapError
from scripts.formulas import ExOracle
from scripts.graph_core import (
    Graph,
    Labeling,
    canonical_label,
    canonical_labeling,
    graph6_decode,
    graph6_encode,
    is_connected,
    make_complete,
    make_empty,
    make_matching,
    orbit_partition,
)
from scripts.packing import PatternGraph, check_packing_caps, is_k_free, p3_pattern, pattern_from_graph6

logger = logging.getLogger(__name__)

KeepPredicate = Callable[[Graph], bool]
Visitor = Callable[[Graph], None]

ORACLE_MAX_PATTERN_ORDER = 5


class EnumerationStats(BaseModel):
    n: int
    classes_visited: int = 0
    nodes_pruned: int = 0
    elapsed: float = 0.0


class SearchResult(BaseModel):
    n: int
    k: int
    s: int
    pattern: str
    value: int
    witnesses: List[str]
    classes_visited: int
    nodes_pruned: int
    elapsed: float


class KFreePredicate:
    """Keep predicate "no k disjoint copies of h"; picklable for worker processes."""

    def __init__(self, h: PatternGraph, k: int):
        self.h = h
        self.k = k

    def __call__(self, g: Graph) -> bool:
        return is_k_free(g, self.h, self.k)


def _always(g: Graph) -> bool:
    return True


def _check_cap(n: int) -> None:
    if n < 0:
        raise ArgumentError(f"graph order must be nonnegative, got {n}")
    cap = min(settings.ENUMERATION_CAP, settings.ENUMERATION_HARD_CAP)
    if n > cap:
        raise EnumerationCapError(f"exhaustive enumeration is capped at {cap} vertices, got n={n}")


# --- canonical augmentation -----------------------------------------------


def _edge_key(adj, u: int, v: int) -> Tuple[int, int, int]:
    """Isomorphism-invariant edge key: endpoint degrees and common neighbours."""
    du, dv = adj[u].bit_count(), adj[v].bit_count()
    return min(du, dv), max(du, dv), (adj[u] & adj[v]).bit_count()


def _max_edge_key(g: Graph) -> Tuple[int, int, int]:
    return max(_edge_key(g.adj, u, v) for u, v in g.edges())


def _canonical_edge(g: Graph, labeling: Labeling, key: Tuple[int, int, int]) -> Tuple[int, int]:
    """Among edges with the given key, the one at the last canonical position."""
    canon = labeling.canonical
    lab = labeling.lab
    for j in range(canon.order - 1, 0, -1):
        row = canon.adj[j] & ((1 << j) - 1)
        while row:
            i = row.bit_length() - 1
            row ^= 1 << i
            if _edge_key(g.adj, lab[i], lab[j]) == key:
                return lab[i], lab[j]
    raise ArgumentError("no edge carries the requested key")


def _in_edge_orbit(generators, start: Tuple[int, int], target: Tuple[int, int]) -> bool:
    start = (min(start), max(start))
    target = (min(target), max(target))
    if start == target:
        return True
    seen = {start}
    stack = [start]
    while stack:
        u, v = stack.pop()
        for perm in generators:
            a, b = perm[u], perm[v]
            image = (a, b) if a < b else (b, a)
            if image == target:
                return True
            if image not in seen:
                seen.add(image)
                stack.append(image)
    return False


def _non_edge_orbits(g: Graph, generators) -> List[Tuple[int, int]]:
    """One representative non-edge per Aut(g)-orbit, in lexicographic order."""
    n = g.order
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]
    if not generators:
        return pairs
    parent = {p: p for p in pairs}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    for perm in generators:
        for u, v in pairs:
            a, b = perm[u], perm[v]
            image = (a, b) if a < b else (b, a)
            x, y = find((u, v)), find(image)
            if x != y:
                parent[max(x, y)] = min(x, y)
    return [p for p in pairs if find(p) == p]


class _Augmenter:
    """Depth-first walk of the canonical augmentation tree."""

    def __init__(self, keep: KeepPredicate, visit: Visitor, stats: EnumerationStats):
        self.keep = keep
        self.visit = visit
        self.stats = stats

    def children(self, g: Graph, labeling: Labeling) -> List[Tuple[Graph, Labeling]]:
        out = []
        for u, v in _non_edge_orbits(g, labeling.generators):
            child = g.add_edge(u, v)
            key = _max_edge_key(child)
            if _edge_key(child.adj, u, v) != key:
                continue
            if not self.keep(child):
                self.stats.nodes_pruned += 1
                continue
            child_labeling = canonical_labeling(child)
            a, b = _canonical_edge(child, child_labeling, key)
            orbits = orbit_partition(child.order, child_labeling.generators)
            if sorted((orbits[a], orbits[b])) != sorted((orbits[u], orbits[v])):
                continue
            if _in_edge_orbit(child_labeling.generators, (a, b), (u, v)):
                out.append((child, child_labeling))
        return out

    def walk(self, g: Graph, labeling: Labeling) -> None:
        self.visit(g)
        self.stats.classes_visited += 1
        for child, child_labeling in self.children(g, labeling):
            self.walk(child, child_labeling)


def enumerate_graphs(
    n: int,
    keep: Optional[KeepPredicate] = None,
    visit: Optional[Visitor] = None,
) -> EnumerationStats:
    """Visit one representative of every isomorphism class of n-vertex graphs satisfying keep.

    keep must be subgraph-closed; the caller vouches for that.
    """
    _check_cap(n)
    keep = keep or _always
    visit = visit or (lambda g: None)
    stats = EnumerationStats(n=n)
    start = time.time()
    root = make_empty(n)
    if keep(root):
        _Augmenter(keep, visit, stats).walk(root, canonical_labeling(root))
    else:
        stats.nodes_pruned += 1
    stats.elapsed = time.time() - start
    logger.info(f"Enumerated {stats.classes_visited} classes on {n} vertices in {stats.elapsed:.2f}s")
    return stats


# --- exact values ---------------------------------------------------------


class _Optimum:
    """Running maximum of s-clique counts with all optimal classes."""

    def __init__(self, s: int, k: int, h: PatternGraph, post_filter: bool, connected_only: bool = False):
        self.s = s
        self.k = k
        self.h = h
        self.post_filter = post_filter
        self.connected_only = connected_only
        self.best = -1
        self.witnesses: Set[str] = set()
        self.on_class: Optional[Visitor] = None
        self.progress = None

    def __call__(self, g: Graph) -> None:
        if self.progress is not None:
            self.progress.update(1)
        if self.post_filter and not is_k_free(g, self.h, self.k):
            return
        if self.on_class is not None:
            self.on_class(g)
        if self.connected_only and not is_connected(g):
            return
        count = count_cliques(g, self.s)
        if count < self.best:
            return
        label = canonical_label(g).decode("ascii")
        if count > self.best:
            self.best = count
            self.witnesses = {label}
        else:
            self.witnesses.add(label)

    def merge(self, best: int, witnesses: Iterable[str]) -> None:
        if best > self.best:
            self.best = best
            self.witnesses = set(witnesses)
        elif best == self.best:
            self.witnesses.update(witnesses)


def _search_subtree(task) -> Tuple[int, List[str], int, int]:
    """Worker entry: walk the augmentation subtree below one frontier graph."""
    data, s, k, pattern_data, prune, connected_only = task
    h = pattern_from_graph6(pattern_data)
    g = graph6_decode(data)
    keep = KFreePredicate(h, k) if prune else _always
    optimum = _Optimum(s, k, h, post_filter=not prune, connected_only=connected_only)
    stats = EnumerationStats(n=g.order)
    _Augmenter(keep, optimum, stats).walk(g, canonical_labeling(g))
    return optimum.best, sorted(optimum.witnesses), stats.classes_visited, stats.nodes_pruned


def _frontier(
    n: int,
    augmenter: _Augmenter,
    width: int,
) -> List[Tuple[Graph, Labeling]]:
    """Visit the shallow levels in-process and return the first level wide enough to split."""
    root = make_empty(n)
    if not augmenter.keep(root):
        augmenter.stats.nodes_pruned += 1
        return []
    level = [(root, canonical_labeling(root))]
    while level and len(level) < width:
        next_level = []
        for g, labeling in level:
            augmenter.visit(g)
            augmenter.stats.classes_visited += 1
            next_level.extend(augmenter.children(g, labeling))
        level = next_level
    return level


def _run_parallel(
    n: int,
    h: PatternGraph,
    k: int,
    s: int,
    optimum: _Optimum,
    keep: KeepPredicate,
    stats: EnumerationStats,
    jobs: int,
    prune: bool,
    progress: bool,
) -> None:
    augmenter = _Augmenter(keep, optimum, stats)
    level = _frontier(n, augmenter, width=8 * jobs)
    if not level:
        return
    pattern_data = graph6_encode(h.graph)
    tasks = [
        (graph6_encode(g), s, k, pattern_data, prune, optimum.connected_only)
        for g, _ in level
    ]
    logger.info(f"Splitting the search into {len(tasks)} subtrees over {jobs} workers")
    with tqdm(total=len(tasks), desc="subtrees", unit=" tree", disable=not progress) as bar:
        with Pool(processes=jobs) as pool:
            for best, witnesses, visited, pruned in pool.imap_unordered(_search_subtree, tasks):
                optimum.merge(best, witnesses)
                stats.classes_visited += visited
                stats.nodes_pruned += pruned
                bar.update(1)


def _check_witnesses(result: SearchResult, h: PatternGraph) -> None:
    for label in result.witnesses:
        g = graph6_decode(label)
        if count_cliques(g, result.s) != result.value or not is_k_free(g, h, result.k):
            raise RuntimeError(f"witness {label} does not attain {result.value} or is not {result.k}H-free")


def _search(
    n: int,
    s: int,
    k: int,
    h: PatternGraph,
    jobs: int,
    source: Optional[Iterable[Graph]],
    prune: bool,
    progress: bool,
    on_class: Optional[Visitor],
    connected_only: bool,
) -> SearchResult:
    start = time.time()
    optimum = _Optimum(s, k, h, post_filter=not prune or source is not None, connected_only=connected_only)
    optimum.on_class = on_class
    keep = KFreePredicate(h, k) if prune else _always
    stats = EnumerationStats(n=n)

    if source is not None:
        seen: Set[bytes] = set()
        for g in tqdm(source, desc="external classes", unit=" graph", disable=not progress):
            if g.order != n:
                raise ArgumentError(f"external graph of order {g.order} in a search on {n} vertices")
            label = canonical_label(g)
            if label in seen:
                continue
            seen.add(label)
            stats.classes_visited += 1
            optimum(g)
    elif jobs > 1 and on_class is None:
        _run_parallel(n, h, k, s, optimum, keep, stats, jobs, prune, progress)
    else:
        if jobs > 1:
            logger.info("Class streaming needs a single process; running serially")
        with tqdm(desc="classes", unit=" class", disable=not progress) as bar:
            optimum.progress = bar
            root = make_empty(n)
            if keep(root):
                _Augmenter(keep, optimum, stats).walk(root, canonical_labeling(root))
            optimum.progress = None

    result = SearchResult(
        n=n,
        k=k,
        s=s,
        pattern=h.pattern_id,
        value=max(optimum.best, 0),
        witnesses=sorted(optimum.witnesses),
        classes_visited=stats.classes_visited,
        nodes_pruned=stats.nodes_pruned,
        elapsed=time.time() - start,
    )
    _check_witnesses(result, h)
    logger.info(
        f"ex({n}, K_{s}, {k}x{h.display_name()}) = {result.value} "
        f"({len(result.witnesses)} witnesses, {result.classes_visited} classes, {result.elapsed:.2f}s)"
    )
    return result


def exact_ex(
    n: int,
    s: int,
    k: int,
    h: Optional[PatternGraph] = None,
    jobs: int = 1,
    source: Optional[Iterable[Graph]] = None,
    prune: bool = True,
    progress: bool = False,
    on_class: Optional[Visitor] = None,
) -> SearchResult:
    """Exact ex(n, K_s, kH) with every optimal isomorphism class as a witness.

    ``source`` replaces the internal enumeration by an external graph stream
    (e.g. from geng); it must contain every class of n-vertex kH-free graphs.
    ``prune=False`` enumerates everything and filters afterwards.
    """
    h = h or p3_pattern()
    if s < 0:
        raise ArgumentError(f"clique size must be nonnegative, got {s}")
    if k < 1:
        raise ArgumentError(f"number of copies must be positive, got {k}")
    if jobs < 1:
        raise ArgumentError(f"jobs must be positive, got {jobs}")
    check_packing_caps(h, k)
    if n < k * h.order:
        complete = make_complete(n)
        return SearchResult(
            n=n,
            k=k,
            s=s,
            pattern=h.pattern_id,
            value=math.comb(n, s),
            witnesses=[canonical_label(complete).decode("ascii")],
            classes_visited=0,
            nodes_pruned=0,
            elapsed=0.0,
        )
    if source is None:
        _check_cap(n)
    return _search(n, s, k, h, jobs, source, prune, progress, on_class, connected_only=False)


def max_connected_cliques(n: int, s: int, h: PatternGraph, jobs: int = 1) -> SearchResult:
    """Maximum s-clique count over connected H-free graphs on n vertices."""
    if n < 1:
        raise ArgumentError(f"connected search needs n >= 1, got {n}")
    _check_cap(n)
    check_packing_caps(h, 1)
    return _search(n, s, 1, h, jobs, None, True, False, None, connected_only=True)


def exact_ex_oracle(h: PatternGraph) -> ExOracle:
    """ExOracle for ex(n, K_i, H) backed by exhaustive search."""
    if h.order > ORACLE_MAX_PATTERN_ORDER:
        raise CapacityError(
            f"enumeration oracle supports patterns up to {ORACLE_MAX_PATTERN_ORDER} vertices, got {h.order}"
        )

    @lru_cache(maxsize=None)
    def oracle(n: int, i: int) -> int:
        if n < 0 or i < 0:
            raise ArgumentError(f"oracle needs n, i >= 0, got n={n}, i={i}")
        if i == 0:
            return 1
        if i == 1:
            return n
        if i > n:
            return 0
        return exact_ex(n, i, 1, h).value

    return oracle


def extremal_h_free_graph(n: int, h: PatternGraph) -> Graph:
    """An H-free graph on n vertices with the most edges."""
    if h.is_p3():
        return make_matching(n)
    result = exact_ex(n, 2, 1, h)
    return graph6_decode(result.witnesses[0])

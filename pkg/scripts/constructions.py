"""Builders for the extremal and candidate-extremal graphs of the kH problem."""

import logging
from typing import Iterator, Optional

from scripts.cliques import count_cliques
from scripts.errors import ArgumentError, ConstructionError, SizeError
from scripts.formulas import binom, f_formula
from scripts.graph_core import (
    MAX_ORDER,
    Graph,
    disjoint_union,
    join,
    make_complete,
    make_empty,
    make_fan,
    make_matching,
)
from scripts.packing import PatternGraph, has_k_disjoint, is_k_free, p3_pattern

logger = logging.getLogger(__name__)


def build_conjecture_union(n: int, k: int) -> Graph:
    """K_{3k-1} ∪ M_{n-3k+1}, the upper end of the sandwich family."""
    if k < 1 or n < 3 * k - 1:
        raise ArgumentError(f"union construction needs n >= 3k - 1 and k >= 1, got n={n}, k={k}")
    return disjoint_union(make_complete(3 * k - 1), make_matching(n - 3 * k + 1))


def build_conjecture_join(n: int, k: int) -> Graph:
    """K_{k-1} + M_{n-k+1}."""
    if k < 1 or n < k:
        raise ArgumentError(f"join construction needs n >= k >= 1, got n={n}, k={k}")
    return join(make_complete(k - 1), make_matching(n - k + 1))


def build_fan(c: int) -> Graph:
    return make_fan(c)


def _check_extremal_part(hx: Graph, expected_order: int, pattern: PatternGraph) -> None:
    if hx.order != expected_order:
        raise SizeError(f"extremal part must have {expected_order} vertices, got {hx.order}")
    if has_k_disjoint(hx, pattern, 1):
        raise ConstructionError(f"supplied graph contains the pattern {pattern.display_name()}")


def _certify(g: Graph, k: int, pattern: PatternGraph) -> Graph:
    if not is_k_free(g, pattern, k):
        raise ConstructionError(f"built graph holds {k} disjoint copies of {pattern.display_name()}")
    return g


def build_thm11_union(n: int, k: int, hx: Graph, pattern: Optional[PatternGraph] = None) -> Graph:
    """K_{km-1} ∪ hx for an H-free hx on n - km + 1 vertices."""
    pattern = pattern or p3_pattern()
    m = pattern.order
    if k < 1 or n < k * m:
        raise ArgumentError(f"union lower-bound graph needs n >= km, got n={n}, k={k}, m={m}")
    if n > MAX_ORDER:
        raise SizeError(f"graph order {n} exceeds {MAX_ORDER}")
    _check_extremal_part(hx, n - k * m + 1, pattern)
    return _certify(disjoint_union(make_complete(k * m - 1), hx), k, pattern)


def build_thm11_join(n: int, k: int, hx: Graph, pattern: Optional[PatternGraph] = None) -> Graph:
    """K_{k-1} + hx for an H-free hx on n - k + 1 vertices."""
    pattern = pattern or p3_pattern()
    if k < 1 or n < k * pattern.order:
        raise ArgumentError(f"join lower-bound graph needs n >= km, got n={n}, k={k}, m={pattern.order}")
    if n > MAX_ORDER:
        raise SizeError(f"graph order {n} exceeds {MAX_ORDER}")
    _check_extremal_part(hx, n - k + 1, pattern)
    return _certify(join(make_complete(k - 1), hx), k, pattern)


def predicted_union_count(n: int, k: int, s: int) -> int:
    """s-cliques of K_{3k-1} ∪ M_{n-3k+1}."""
    if k < 1 or n < 3 * k - 1:
        raise ArgumentError(f"union construction needs n >= 3k - 1, got n={n}, k={k}")
    rest = n - 3 * k + 1
    extra = 0
    if s == 1:
        extra = rest
    elif s == 2:
        extra = rest // 2
    return binom(3 * k - 1, s) + extra


def predicted_join_count(n: int, k: int, s: int) -> int:
    return f_formula(n, k, s)


def sandwich_members(n: int, k: int) -> Iterator[Graph]:
    """K_{3k-1} ∪ (j matching edges) for j = 0 .. floor((n-3k+1)/2).

    Up to isomorphism these are all graphs between K_{3k-1} ∪ I and
    K_{3k-1} ∪ M on n vertices.
    """
    if k < 1 or n < 3 * k - 1:
        raise ArgumentError(f"sandwich family needs n >= 3k - 1, got n={n}, k={k}")
    rest = n - 3 * k + 1
    core = make_complete(3 * k - 1)
    for j in range(rest // 2 + 1):
        outside = disjoint_union(make_matching(2 * j), make_empty(rest - 2 * j))
        yield disjoint_union(core, outside)


def construction_counts(n: int, k: int, s: int) -> dict:
    """Clique counts of both conjectured constructions, built and counted."""
    counts = {"join": count_cliques(build_conjecture_join(n, k), s)}
    if n >= 3 * k - 1:
        counts["union"] = count_cliques(build_conjecture_union(n, k), s)
    logger.debug(f"Construction counts at n={n}, k={k}, s={s}: {counts}")
    return counts

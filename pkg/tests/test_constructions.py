#!/usr/bin/env python
"""Tests for the union, join and fan constructions."""

import math

import pytest

from scripts.cliques import count_cliques
from scripts.constructions import (
    build_conjecture_join,
    build_conjecture_union,
    build_fan,
    build_thm11_join,
    build_thm11_union,
    construction_counts,
    predicted_join_count,
    predicted_union_count,
    sandwich_members,
)
from scripts.errors import ArgumentError, ConstructionError, SizeError
from scripts.formulas import conjecture_value, f_formula
from scripts.graph_core import MAX_ORDER, Graph, make_complete, make_matching
from scripts.packing import complete_pattern, is_k_free, p3_pattern

P3 = p3_pattern()


def test_union_example():
    g = build_conjecture_union(8, 2)
    assert (g.order, g.edge_count) == (8, 11)
    assert count_cliques(g, 3) == 10
    assert is_k_free(g, P3, 2)


def test_join_example():
    g = build_conjecture_join(10, 2)
    assert (g.order, g.edge_count) == (10, 13)
    assert count_cliques(g, 3) == 4
    assert is_k_free(g, P3, 2)


def test_fan_example():
    g = build_fan(4)
    assert (g.order, g.edge_count) == (9, 12)
    assert count_cliques(g, 3) == 4


def test_construction_domains():
    with pytest.raises(ArgumentError):
        build_conjecture_union(4, 2)
    with pytest.raises(ArgumentError):
        build_conjecture_join(1, 2)
    assert build_conjecture_union(5, 2) == make_complete(5)


def test_predicted_counts():
    assert predicted_union_count(8, 2, 3) == 10
    assert predicted_union_count(8, 2, 2) == 10 + 1
    assert predicted_union_count(8, 2, 1) == 8
    assert predicted_join_count(10, 2, 3) == 4
    assert construction_counts(8, 2, 3) == {"join": 3, "union": 10}
    assert construction_counts(4, 2, 3) == {"join": 1}


def test_constructions_realise_the_conjecture():
    for k in range(1, 6):
        for s in range(3, 7):
            for n in range(max(k, 3 * k - 1), MAX_ORDER + 1):
                joined = count_cliques(build_conjecture_join(n, k), s)
                assert joined == predicted_join_count(n, k, s) == f_formula(n, k, s)
                if n < 3 * k - 1:
                    continue
                union = count_cliques(build_conjecture_union(n, k), s)
                assert union == predicted_union_count(n, k, s) == math.comb(3 * k - 1, s)
                if n >= 3 * k:
                    assert max(union, joined) == conjecture_value(n, k, s)


@pytest.mark.parametrize("n,k", [(6, 2), (9, 2), (12, 3), (13, 4)])
def test_constructions_avoid_k_copies(n, k):
    assert is_k_free(build_conjecture_union(n, k), P3, k)
    assert is_k_free(build_conjecture_join(n, k), P3, k)
    assert not is_k_free(make_complete(3 * k), P3, k)


def test_sandwich_members():
    family = list(sandwich_members(9, 2))
    assert [g.edge_count for g in family] == [10, 11, 12]
    for g in family:
        assert g.order == 9
        assert count_cliques(g, 3) == 10
        assert is_k_free(g, P3, 2)


def test_lower_bound_graphs_for_p3():
    union = build_thm11_union(8, 2, make_matching(3))
    assert union.order == 8 and count_cliques(union, 3) == 10
    joined = build_thm11_join(8, 2, make_matching(7))
    assert joined.order == 8 and count_cliques(joined, 3) == 3


def test_lower_bound_graphs_for_triangles():
    k3 = complete_pattern(3)
    union = build_thm11_union(7, 2, make_complete(2), pattern=k3)
    assert count_cliques(union, 3) == 10
    c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    wheel = build_thm11_join(6, 2, c5, pattern=k3)
    assert count_cliques(wheel, 3) == 5
    assert is_k_free(wheel, k3, 2)


def test_lower_bound_graph_errors():
    with pytest.raises(SizeError):
        build_thm11_union(8, 2, make_matching(4))
    with pytest.raises(ConstructionError):
        build_thm11_union(8, 2, make_complete(3))
    with pytest.raises(ConstructionError):
        build_thm11_join(8, 2, Graph.from_edges(7, [(0, 1), (1, 2)]))
    with pytest.raises(ArgumentError):
        build_thm11_join(5, 2, make_matching(4))

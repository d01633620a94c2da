#!/usr/bin/env python
"""Tests for the conjecture and bound-chain verification reports."""

import pytest
from networkx.algorithms import isomorphism

from conftest import to_networkx
from scripts.errors import ArgumentError
from scripts.graph_core import Graph, canonical_label, disjoint_union, join, make_complete, make_empty, make_matching
from scripts.packing import complete_pattern, p3_pattern, path_pattern
from scripts.search import enumerate_graphs
from scripts.verify import (
    NEITHER,
    SANDWICH_UNION,
    SUBGRAPH_OF_JOIN,
    classify_witness,
    is_sandwiched,
    is_subgraph_of_join,
    verify_bounds,
    verify_conjecture,
)


def _label(g) -> str:
    return canonical_label(g).decode("ascii")


def test_sandwich_shapes():
    assert is_sandwiched(disjoint_union(make_complete(5), make_matching(3)), 2)
    assert is_sandwiched(disjoint_union(make_complete(5), make_empty(3)), 2)
    assert is_sandwiched(make_complete(5), 2)
    pendant = disjoint_union(make_complete(5), make_empty(1)).add_edge(0, 5)
    assert not is_sandwiched(pendant, 2)
    almost = make_complete(5).remove_edge(0, 1)
    assert not is_sandwiched(disjoint_union(almost, make_empty(2)), 2)
    with pytest.raises(ArgumentError):
        is_sandwiched(make_complete(4), 2)


def test_join_shapes():
    assert is_subgraph_of_join(join(make_complete(1), make_matching(7)), 2)
    assert is_subgraph_of_join(make_matching(6), 1)
    assert not is_subgraph_of_join(disjoint_union(make_complete(5), make_empty(2)), 2)
    assert is_subgraph_of_join(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]), 2)


def test_classify_witness():
    assert classify_witness(disjoint_union(make_complete(5), make_empty(2)), 2) == [SANDWICH_UNION]
    assert classify_witness(join(make_complete(1), make_matching(6)), 2) == [SUBGRAPH_OF_JOIN]
    cycle = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    assert classify_witness(cycle, 2) == [NEITHER]


def test_join_shape_matches_networkx():
    host = to_networkx(join(make_complete(1), make_matching(5)))
    graphs = []
    enumerate_graphs(6, visit=graphs.append)
    for g in graphs:
        matcher = isomorphism.GraphMatcher(host, to_networkx(g))
        assert is_subgraph_of_join(g, 2) == matcher.subgraph_is_monomorphic()


def test_conjecture_at_seven():
    report = verify_conjecture(7, 2, 3)
    assert report.ok
    assert (report.expected, report.computed) == (10, 10)
    assert report.conformance == "pass"
    assert report.regime == "small-k"
    expected = {
        _label(disjoint_union(make_complete(5), make_empty(2))),
        _label(disjoint_union(make_complete(5), make_matching(2))),
    }
    assert set(report.witnesses) == expected
    assert all(shapes == [SANDWICH_UNION] for shapes in report.classifications.values())
    assert report.csv_row() == [7, 2, 3, 10, 10, True, True, 2]


def test_conjecture_for_four_cliques():
    report = verify_conjecture(6, 2, 4)
    assert report.ok
    assert report.computed == 5


def test_tie_is_reported(monkeypatch):
    monkeypatch.setattr("scripts.verify.f_formula", lambda n, k, s: 10)
    report = verify_conjecture(6, 2, 3)
    assert report.tie
    assert report.conformance == "tie"
    assert report.ok


def test_disagreement_is_reported_not_raised(monkeypatch):
    monkeypatch.setattr("scripts.verify.conjecture_value", lambda n, k, s: 11)
    report = verify_conjecture(6, 2, 3)
    assert not report.value_ok
    assert report.conformance == "fail"
    assert not report.ok


def test_conjecture_argument_errors():
    with pytest.raises(ArgumentError):
        verify_conjecture(5, 2, 3)
    with pytest.raises(ArgumentError):
        verify_conjecture(6, 2, 6)
    with pytest.raises(ArgumentError):
        verify_conjecture(6, 2, 2)


def test_bounds_for_p3():
    report = verify_bounds(6, 2, 3)
    assert (report.lower_thm11, report.lower_option_union, report.lower_option_join) == (10, 10, 2)
    assert report.upper_thm12 == 13
    assert report.exact == 10
    assert report.ok

    edges = verify_bounds(6, 2, 2)
    assert (edges.lower_thm11, edges.lower_option_union, edges.lower_option_join) == (10, 10, 7)
    assert edges.upper_thm12 == 13
    assert edges.exact == 10
    assert edges.ok


def test_bounds_without_exact():
    report = verify_bounds(30, 2, 3, with_exact=False)
    assert report.exact is None
    assert report.lower_thm11 == 14
    assert report.ok


def test_bounds_for_triangles():
    report = verify_bounds(6, 2, 3, complete_pattern(3))
    assert report.lower_thm11 == 10
    assert report.upper_thm12 == 16
    assert 10 <= report.exact <= 16
    assert report.ok


def test_bounds_argument_errors():
    with pytest.raises(ArgumentError):
        verify_bounds(5, 2, 3)


@pytest.mark.slow
@pytest.mark.parametrize("pattern", [p3_pattern(), complete_pattern(3), path_pattern(4)])
def test_bound_chain_grid(pattern):
    for n in range(2 * pattern.order, 9):
        for s in range(2, 6):
            assert verify_bounds(n, 2, s, pattern).ok

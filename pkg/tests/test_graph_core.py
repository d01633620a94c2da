#!/usr/bin/env python
"""Tests for graph construction, canonical labels and the graph6 codec."""

import pytest
import networkx as nx

from conftest import all_labeled_graphs, random_graph, to_networkx
from scripts.errors import ArgumentError, Graph6ParseError, SizeError
from scripts.graph_core import (
    Graph,
    canonical_label,
    canonical_labeling,
    complement,
    components,
    disjoint_union,
    format_graph6_stream,
    graph6_decode,
    graph6_encode,
    induced,
    is_connected,
    join,
    make_complete,
    make_empty,
    make_fan,
    make_matching,
    orbit_partition,
    read_graph6_stream,
    vertex_set,
)


def test_builders():
    assert make_empty(0).order == 0
    assert make_empty(3).edge_count == 0
    assert make_complete(5).edge_count == 10
    assert make_complete(1).edge_count == 0
    assert make_complete(8).edge_count == 28

    m7 = make_matching(7)
    assert m7.edge_count == 3
    assert m7.degree(6) == 0
    assert m7.max_degree() == 1
    assert make_complete(5).max_degree() == 4
    assert make_empty(0).max_degree() == 0
    assert make_matching(6).edge_count == 3
    assert make_matching(0).order == 0


def test_order_cap():
    with pytest.raises(SizeError):
        make_empty(65)
    with pytest.raises(SizeError):
        make_complete(-1)
    assert make_complete(64).edge_count == 64 * 63 // 2


def test_fan_layout():
    f2 = make_fan(2)
    assert (f2.order, f2.edge_count) == (5, 6)
    assert f2.neighbors(0) == [1, 2, 3, 4]
    assert f2.has_edge(1, 2) and f2.has_edge(3, 4) and not f2.has_edge(2, 3)
    assert make_fan(0) == make_complete(1)


def test_union_and_join_sizes():
    g = disjoint_union(make_complete(5), make_matching(3))
    assert (g.order, g.edge_count) == (8, 11)
    assert disjoint_union(make_complete(5), make_empty(0)) == make_complete(5)

    k2m4 = join(make_complete(2), make_matching(4))
    assert (k2m4.order, k2m4.edge_count) == (6, 1 + 2 + 8)
    assert all(k2m4.has_edge(a, b) for a in (0, 1) for b in range(2, 6))
    assert join(make_empty(0), make_matching(4)) == make_matching(4)


def test_join_of_center_and_matching_is_fan():
    assert canonical_label(join(make_complete(1), make_matching(4))) == canonical_label(make_fan(2))


def test_combinators_keep_invariants(rng):
    for _ in range(50):
        g = random_graph(rng, rng.randint(0, 8))
        h = random_graph(rng, rng.randint(0, 8))
        union = disjoint_union(g, h)
        joined = join(g, h)
        assert union.is_valid() and joined.is_valid() and complement(g).is_valid()
        assert union.edge_count == g.edge_count + h.edge_count
        assert joined.edge_count == union.edge_count + g.order * h.order


def test_induced():
    assert induced(make_complete(5), vertex_set([0, 2, 4])) == make_complete(3)
    assert induced(make_matching(6), vertex_set([0, 2, 4])).edge_count == 0
    assert induced(make_fan(2), vertex_set([0, 1, 2])) == make_complete(3)
    with pytest.raises(ArgumentError):
        induced(make_complete(3), vertex_set([5]))


def test_complement_and_components():
    assert complement(make_complete(5)).edge_count == 0
    assert len(components(make_matching(6))) == 3
    assert len(components(make_matching(7))) == 4
    assert is_connected(make_fan(2))
    assert not is_connected(make_empty(2))
    assert is_connected(make_empty(0))


def test_permute_rejects_non_permutation():
    with pytest.raises(ArgumentError):
        make_complete(3).permute([0, 0, 1])


def test_canonical_label_distinguishes_k5_from_c5():
    c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    assert canonical_label(c5) != canonical_label(make_complete(5))


@pytest.mark.parametrize("n,classes", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_labeled_graph_dedup(n, classes):
    assert len({canonical_label(g) for g in all_labeled_graphs(n)}) == classes


def test_label_classes_agree_with_networkx():
    groups = {}
    for g in all_labeled_graphs(5):
        groups.setdefault(canonical_label(g), g)
    reps = [to_networkx(g) for g in groups.values()]
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            assert not nx.is_isomorphic(reps[i], reps[j])


def test_label_is_permutation_invariant(rng):
    for _ in range(1000):
        n = rng.randint(0, 10)
        g = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_label(g.permute(perm)) == canonical_label(g)


def test_automorphism_generators():
    c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    labeling = canonical_labeling(c5)
    assert orbit_partition(5, labeling.generators) == [0] * 5
    for perm in labeling.generators:
        assert c5.permute(perm) == c5

    path = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert orbit_partition(4, canonical_labeling(path).generators) == [0, 1, 1, 0]


def test_graph6_known_strings():
    assert graph6_decode("D~{") == make_complete(5)
    assert graph6_encode(make_complete(5)) == b"D~{"
    assert graph6_encode(make_empty(0)) == b"?"
    assert graph6_decode(b">>graph6<<D~{\n") == make_complete(5)


def test_graph6_long_header():
    g = make_matching(63)
    data = graph6_encode(g)
    assert data[:4] == b"~??~"
    assert graph6_decode(data) == g


def test_graph6_matches_networkx(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 20))
        ours = graph6_encode(g)
        theirs = nx.to_graph6_bytes(to_networkx(g), header=False).strip()
        assert ours == theirs
        assert graph6_decode(ours) == g


@pytest.mark.parametrize(
    "data,offset",
    [
        ("D~", 2),
        ("D~\x20", 2),
        ("D~~", 2),
        ("D~{?", 3),
        ("", 0),
    ],
)
def test_graph6_parse_errors(data, offset):
    with pytest.raises(Graph6ParseError) as info:
        graph6_decode(data)
    assert info.value.offset == offset


def test_graph6_rejects_orders_past_the_cap():
    with pytest.raises(Graph6ParseError):
        graph6_decode(b"~?@A")


def test_graph6_streams():
    graphs = list(read_graph6_stream([b"D~{\n", b"\n", "@\n"]))
    assert graphs == [make_complete(5), make_empty(1)]
    assert list(format_graph6_stream(graphs)) == ["D~{\n", "@\n"]


def test_graph6_stream_rejects_non_ascii_text():
    with pytest.raises(Graph6ParseError) as info:
        list(read_graph6_stream(["D~{\n", "Dé\n"]))
    assert info.value.offset == 1

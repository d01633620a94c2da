"""Shared fixtures and brute-force oracles for the workbench tests."""

import random
import sys
from itertools import combinations
from pathlib import Path

import pytest

# Add parent directory to path to access scripts and mcp_servers
sys.path.append(str(Path(__file__).parent.parent))

from scripts.graph_core import Graph  # noqa: E402


def brute_count_cliques(g: Graph, s: int) -> int:
    """Number of s-subsets that are pairwise adjacent."""
    return sum(
        1
        for subset in combinations(range(g.order), s)
        if all(g.has_edge(u, v) for u, v in combinations(subset, 2))
    )


def _carries_p3(g: Graph, triple) -> bool:
    a, b, c = triple
    edges = g.has_edge(a, b) + g.has_edge(b, c) + g.has_edge(a, c)
    return edges >= 2


def brute_p3_packing(g: Graph) -> int:
    """Largest family of disjoint vertex triples each carrying a P3."""
    triples = [t for t in combinations(range(g.order), 3) if _carries_p3(g, t)]

    def best(start: int, used: int) -> int:
        top = 0
        for i in range(start, len(triples)):
            mask = sum(1 << v for v in triples[i])
            if mask & used:
                continue
            top = max(top, 1 + best(i + 1, used | mask))
        return top

    return best(0, 0)


def all_labeled_graphs(n: int):
    """Every labelled simple graph on n vertices."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if (bits >> i) & 1])


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def to_networkx(g: Graph):
    import networkx as nx

    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.order))
    nxg.add_edges_from(g.edges())
    return nxg


@pytest.fixture
def rng():
    return random.Random(20240601)

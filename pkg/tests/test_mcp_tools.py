#!/usr/bin/env python
"""Direct test of MCP tools without client."""

from mcp_servers.turan_server import (
    check_bounds,
    check_conjecture,
    count_graph_cliques,
    evaluate_formula,
    exact_search,
    packing,
)
from scripts.graph_core import graph6_encode, make_complete
from scripts.packing import path_pattern


def test_evaluate_formula():
    assert evaluate_formula("conjecture", n=6, k=2, s=3) == {"name": "conjecture", "value": 10, "status": "success"}
    assert evaluate_formula("g", k=4, s=3)["value"] == 1181
    assert evaluate_formula("luo", n=10, k=6, s=3, a=2)["value"] == 10
    assert evaluate_formula("regime", n=6, k=2, s=3)["value"] == "small-k"


def test_evaluate_formula_errors():
    unknown = evaluate_formula("h", n=6, k=2, s=3)
    assert unknown["status"] == "error"
    bad = evaluate_formula("conjecture", n=5, k=2, s=3)
    assert bad["status"] == "error"
    assert "n >= 3k" in bad["error"]


def test_count_graph_cliques():
    result = count_graph_cliques("D~{", 3)
    assert result["status"] == "success"
    assert result["count"] == 10
    assert count_graph_cliques("D~", 3)["status"] == "error"


def test_packing():
    p6 = graph6_encode(path_pattern(6).graph).decode("ascii")
    assert packing(p6)["packing_number"] == 2
    assert packing("D~{", k=2)["has_k_disjoint"] is False

    triangle = graph6_encode(make_complete(3)).decode("ascii")
    k6 = graph6_encode(make_complete(6)).decode("ascii")
    assert packing(k6, k=2, pattern=triangle)["has_k_disjoint"] is True
    assert packing(k6, pattern=triangle)["status"] == "error"


def test_exact_search():
    result = exact_search(6, 2, 3)
    assert result["status"] == "success"
    assert result["value"] == 10
    assert len(result["witnesses"]) == 1

    capped = exact_search(13, 2, 3)
    assert capped["status"] == "error"


def test_check_conjecture():
    report = check_conjecture(7, 2, 3)
    assert report["status"] == "success"
    assert report["conformance"] == "pass"
    assert check_conjecture(5, 2, 3)["status"] == "error"


def test_check_bounds():
    report = check_bounds(6, 2, 3)
    assert report["status"] == "success"
    assert (report["lower_thm11"], report["upper_thm12"], report["exact"]) == (10, 13, 10)
    assert report["chain_ok"]

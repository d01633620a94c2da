#!/usr/bin/env python
"""MCP server exposing the Turán workbench (formulas, counting, packing, exact search, verification)."""

import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional

# Add parent directory to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from mcp.server.fastmcp import FastMCP

from scripts.cliques import count_cliques
from scripts.errors import WorkbenchError
from scripts.formulas import conjecture_value, f_formula, g_threshold, luo_f, proven_regime
from scripts.graph_core import graph6_decode
from scripts.packing import has_k_disjoint, max_p3_packing, p3_pattern, pattern_from_graph6
from scripts.search import exact_ex
from scripts.verify import verify_bounds, verify_conjecture

# Try to import W&B integration, fallback if not available
try:
    from scripts.wandb_integration import ensure_tracer, trace_mcp_operation

    tracer = ensure_tracer()
except ImportError:
    tracer = None

    def trace_mcp_operation(operation_name: str):
        def decorator(func):
            return func

        return decorator


mcp = FastMCP("turan-workbench")


def _pattern(pattern: Optional[str]):
    return p3_pattern() if not pattern else pattern_from_graph6(pattern)


@trace_mcp_operation("evaluate_formula")
@mcp.tool()
def evaluate_formula(name: str, n: int = 0, k: int = 0, s: int = 0, a: int = 1) -> Dict[str, Any]:
    """
    Evaluate a closed formula of the kP3 clique problem.

    Args:
        name: one of "f", "conjecture", "g", "luo", "regime"
        n: number of vertices
        k: number of forbidden disjoint P3 copies
        s: clique size
        a: the extra parameter of "luo"

    Returns:
        Dictionary with the value and a status field
    """
    logging.info(f"Evaluating formula {name} at n={n}, k={k}, s={s}, a={a}")
    evaluators = {
        "f": lambda: f_formula(n, k, s),
        "conjecture": lambda: conjecture_value(n, k, s),
        "g": lambda: g_threshold(k, s),
        "luo": lambda: luo_f(n, k, a, s),
        "regime": lambda: proven_regime(n, k, s),
    }
    if name not in evaluators:
        return {"name": name, "error": f"unknown formula, expected one of {sorted(evaluators)}", "status": "error"}
    try:
        return {"name": name, "value": evaluators[name](), "status": "success"}
    except WorkbenchError as e:
        return {"name": name, "error": str(e), "status": "error"}


@trace_mcp_operation("count_cliques")
@mcp.tool()
def count_graph_cliques(graph6: str, s: int) -> Dict[str, Any]:
    """
    Count the s-cliques of a graph given in graph6.

    Args:
        graph6: graph6 string of the graph
        s: clique size

    Returns:
        Dictionary with the exact count
    """
    try:
        g = graph6_decode(graph6)
        return {"graph6": graph6, "s": s, "count": count_cliques(g, s), "status": "success"}
    except WorkbenchError as e:
        return {"graph6": graph6, "error": str(e), "status": "error"}


@trace_mcp_operation("packing")
@mcp.tool()
def packing(graph6: str, k: Optional[int] = None, pattern: Optional[str] = None) -> Dict[str, Any]:
    """
    P3 packing number of a graph, or whether it holds k disjoint copies of a pattern.

    Args:
        graph6: graph6 string of the graph
        k: number of copies to test for (optional)
        pattern: graph6 of a connected pattern (default P3)
    """
    try:
        g = graph6_decode(graph6)
        h = _pattern(pattern)
        if k is None:
            if not h.is_p3():
                return {"graph6": graph6, "error": "packing numbers are only computed for P3; pass k", "status": "error"}
            return {"graph6": graph6, "packing_number": max_p3_packing(g), "status": "success"}
        return {"graph6": graph6, "k": k, "has_k_disjoint": has_k_disjoint(g, h, k), "status": "success"}
    except WorkbenchError as e:
        return {"graph6": graph6, "error": str(e), "status": "error"}


@trace_mcp_operation("exact_search")
@mcp.tool()
def exact_search(n: int, k: int, s: int, pattern: Optional[str] = None) -> Dict[str, Any]:
    """
    Exact ex(n, K_s, kH) by isomorph-free exhaustive search (n <= 12).

    Args:
        n: number of vertices
        k: number of forbidden disjoint copies
        s: clique size
        pattern: graph6 of the connected pattern H (default P3)

    Returns:
        The search result with all extremal classes as graph6 witnesses
    """
    logging.info(f"Exact search for n={n}, k={k}, s={s}, pattern={pattern or 'P3'}")
    try:
        result = exact_ex(n, s, k, _pattern(pattern))
        return {**result.model_dump(mode="json"), "status": "success"}
    except WorkbenchError as e:
        return {"n": n, "k": k, "s": s, "error": str(e), "status": "error"}


@trace_mcp_operation("verify_conjecture")
@mcp.tool()
def check_conjecture(n: int, k: int, s: int) -> Dict[str, Any]:
    """Compare the exact value and extremal classes with the conjectured ones."""
    try:
        report = verify_conjecture(n, k, s)
        return {**report.model_dump(mode="json"), "status": "success"}
    except WorkbenchError as e:
        return {"n": n, "k": k, "s": s, "error": str(e), "status": "error"}


@trace_mcp_operation("verify_bounds")
@mcp.tool()
def check_bounds(n: int, k: int, s: int, pattern: Optional[str] = None) -> Dict[str, Any]:
    """Evaluate the lower bound, exact value and upper bound for one (n, k, s, H)."""
    try:
        report = verify_bounds(n, k, s, _pattern(pattern))
        return {**report.model_dump(mode="json"), "status": "success"}
    except WorkbenchError as e:
        return {"n": n, "k": k, "s": s, "error": str(e), "status": "error"}


if __name__ == "__main__":
    mcp.run(transport="stdio")

#!/usr/bin/env python
"""Example usage of the Turán workbench MCP tools."""

from mcp_servers.turan_server import check_bounds, check_conjecture, count_graph_cliques, evaluate_formula, exact_search


def example_formulas():
    """Closed-form values around the 2P3 triangle law."""
    print("📐 Formula Examples")
    print("=" * 40)
    for n in (6, 22, 23, 30):
        result = evaluate_formula("conjecture", n=n, k=2, s=3)
        print(f"ex({n}, K3, 2P3) predicted: {result['value']}")
    result = evaluate_formula("g", k=4, s=3)
    print(f"Large-n threshold g(4, 3): {result['value']}")


def example_exact_search():
    """Exhaustive search on small orders."""
    print("\n🔍 Exact Search Examples")
    print("=" * 40)
    result = exact_search(7, 2, 3)
    if result["status"] == "success":
        print(f"ex(7, K3, 2P3) = {result['value']} over {result['classes_visited']} classes")
        for witness in result["witnesses"]:
            count = count_graph_cliques(witness, 3)["count"]
            print(f"  witness {witness}: {count} triangles")
    else:
        print(f"❌ Error: {result['error']}")


def example_verification():
    """Conjecture and bound-chain reports."""
    print("\n✅ Verification Examples")
    print("=" * 40)
    report = check_conjecture(8, 2, 4)
    print(f"Conjecture at n=8, k=2, s=4: {report.get('conformance')} (regime {report.get('regime')})")
    bounds = check_bounds(6, 2, 3)
    print(f"Bounds at n=6, k=2, s=3: {bounds['lower_thm11']} <= {bounds['exact']} <= {bounds['upper_thm12']}")


if __name__ == "__main__":
    example_formulas()
    example_exact_search()
    example_verification()

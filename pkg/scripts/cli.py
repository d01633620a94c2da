#!/usr/bin/env python
"""
Command-line front end of the Turán workbench.

Exit status: 0 ok, 1 usage or I/O error, 2 a verification check failed.
Primary results go to stdout and are deterministic; timings go to the log on stderr.
"""

import argparse
import csv
import io
import json
import logging
import sys
from typing import List, Optional, Sequence

from scripts import settings
from scripts.cliques import count_cliques, count_cliques_through
from scripts.constructions import (
    build_conjecture_join,
    build_conjecture_union,
    build_fan,
    build_thm11_join,
    build_thm11_union,
    construction_counts,
)
from scripts.errors import Graph6ParseError, WorkbenchError
from scripts.formulas import (
    CONVENTIONS,
    conjecture_value,
    ex_p3_closed,
    f_formula,
    g_threshold,
    luo_bound,
    luo_f,
    proven_regime,
    s_equals_k_plus_one_threshold,
    thm11_lower,
    thm12_upper,
)
from scripts.graph_core import Graph, format_graph6_stream, graph6_decode, graph6_encode, read_graph6_stream, vertex_set
from scripts.packing import PatternGraph, has_k_disjoint, max_p3_packing, p3_pattern, pattern_from_graph6
from scripts.result_cache import CacheRecord, ResultCache
from scripts.search import KFreePredicate, enumerate_graphs, exact_ex, exact_ex_oracle, extremal_h_free_graph
from scripts.verify import CSV_COLUMNS, verify_bounds, verify_conjecture
from scripts.wandb_integration import ensure_tracer, record_search, record_verification

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CHECK_FAILED = 2

TABLE_COLUMNS = ["n", "k", "s", "formula", "construction", "exact", "lower", "upper"]


class UsageError(Exception):
    """Bad command line; reported with exit status 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _emit(out, text: str) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _dump(payload) -> str:
    return json.dumps(payload, sort_keys=True)


def _graph_arg(value: str, flag: str) -> Graph:
    try:
        return graph6_decode(value)
    except Graph6ParseError as e:
        raise UsageError(f"{flag}: {e}") from e


def _pattern_arg(value: Optional[str]) -> PatternGraph:
    if value is None:
        return p3_pattern()
    try:
        return pattern_from_graph6(value)
    except Graph6ParseError as e:
        raise UsageError(f"--pattern: {e}") from e


def _oracle_for(h: PatternGraph):
    return ex_p3_closed if h.is_p3() else exact_ex_oracle(h)


# --- formula ---------------------------------------------------------------


def _cmd_formula(args, out) -> int:
    h = _pattern_arg(args.pattern)
    name, values = args.name, args.values
    arity = {
        "f": 3, "g": 2, "luo": 4, "conjecture": 3, "regime": 3,
        "k-plus-one": 1, "thm11": 3, "thm12": 3, "luo-bound": 3,
    }[name]
    if len(values) != arity:
        raise UsageError(f"formula {name}: expected {arity} integers, got {len(values)}")
    if name == "f":
        result = f_formula(*values)
    elif name == "g":
        result = g_threshold(*values)
    elif name == "luo":
        result = luo_f(*values)
    elif name == "conjecture":
        result = conjecture_value(*values)
    elif name == "regime":
        result = proven_regime(*values)
    elif name == "k-plus-one":
        result = s_equals_k_plus_one_threshold(*values)
    elif name == "luo-bound":
        result = luo_bound(*values)
    elif name == "thm11":
        n, k, s = values
        result = " ".join(str(v) for v in thm11_lower(n, k, s, h.order, _oracle_for(h), args.convention))
    else:
        n, k, s = values
        result = thm12_upper(n, k, s, h.order, _oracle_for(h), args.convention)
    _emit(out, str(result))
    return EXIT_OK


# --- construct -------------------------------------------------------------


def _cmd_construct(args, out) -> int:
    values = args.values
    needed = 1 if args.kind == "fan" else 2
    if len(values) != needed:
        raise UsageError(f"construct {args.kind}: expected {needed} integers, got {len(values)}")
    if args.kind == "union":
        g = build_conjecture_union(*values)
    elif args.kind == "join":
        g = build_conjecture_join(*values)
    elif args.kind == "fan":
        g = build_fan(*values)
    else:
        n, k = values
        h = _pattern_arg(args.pattern)
        if args.kind == "thm11-union":
            g = build_thm11_union(n, k, extremal_h_free_graph(n - k * h.order + 1, h), h)
        else:
            g = build_thm11_join(n, k, extremal_h_free_graph(n - k + 1, h), h)
    if args.emit == "graph6":
        _emit(out, graph6_encode(g).decode("ascii"))
    else:
        cliques = {str(s): count_cliques(g, s) for s in range(args.s_from, args.s_to + 1)}
        _emit(out, _dump({"order": g.order, "edges": g.edge_count, "cliques": cliques}))
    return EXIT_OK


# --- count / pack ----------------------------------------------------------


def _cmd_count(args, out) -> int:
    g = _graph_arg(args.graph, "--graph")
    if args.through:
        try:
            roots = vertex_set(int(v) for v in args.through.split(","))
        except ValueError as e:
            raise UsageError(f"--through: {e}") from e
        _emit(out, str(count_cliques_through(g, args.s, roots)))
    else:
        _emit(out, str(count_cliques(g, args.s)))
    return EXIT_OK


def _packing_number(g: Graph, h: PatternGraph) -> int:
    if h.is_p3():
        return max_p3_packing(g)
    k = 0
    while has_k_disjoint(g, h, k + 1):
        k += 1
    return k


def _cmd_pack(args, out) -> int:
    g = _graph_arg(args.graph, "--graph")
    h = _pattern_arg(args.pattern)
    if args.k is not None:
        _emit(out, "true" if has_k_disjoint(g, h, args.k) else "false")
    else:
        _emit(out, str(_packing_number(g, h)))
    return EXIT_OK


# --- exact / enumerate -----------------------------------------------------


def _search_payload(result, source: str) -> dict:
    payload = result.model_dump(mode="json", exclude={"elapsed"})
    payload["source"] = source
    return payload


def _cached_payload(record: CacheRecord) -> dict:
    return {
        "n": record.n,
        "k": record.k,
        "s": record.s,
        "pattern": record.pattern,
        "value": record.value,
        "witnesses": record.witnesses,
        "classes_visited": None,
        "nodes_pruned": None,
        "source": "cache",
    }


def _exact_result(n: int, k: int, s: int, h: PatternGraph, cache: Optional[ResultCache], jobs: int, **kwargs) -> dict:
    external = kwargs.get("source") is not None
    streaming = kwargs.get("on_class") is not None
    if cache is not None and not external and not streaming:
        record = cache.get(n, k, s, h.pattern_id, method="enumeration")
        if record is not None:
            logger.info(f"Cache hit for n={n}, k={k}, s={s}")
            return _cached_payload(record)
    result = exact_ex(n, s, k, h, jobs=jobs, **kwargs)
    logger.info(f"Exact search took {result.elapsed:.2f}s")
    record_search({"n": n, "k": k, "s": s, "pattern": h.pattern_id}, result.model_dump(mode="json"))
    if cache is not None and not external:
        cache.put(
            CacheRecord(
                n=n, k=k, s=s, pattern=result.pattern, value=result.value,
                witnesses=result.witnesses, method="enumeration",
            )
        )
    return _search_payload(result, "external" if external else "enumeration")


def _open_cache(path: Optional[str]) -> Optional[ResultCache]:
    path = path or settings.CACHE_PATH
    return ResultCache(path) if path else None


def _cmd_exact(args, out) -> int:
    h = _pattern_arg(args.pattern)
    kwargs = {"prune": not args.no_prune, "progress": args.progress}
    stream = sink = None
    try:
        if args.from_graph6:
            stream = open(args.from_graph6, "rb")
            kwargs["source"] = read_graph6_stream(stream)
        if args.emit_classes:
            sink = open(args.emit_classes, "w", encoding="ascii")
            kwargs["on_class"] = lambda g: sink.write(graph6_encode(g).decode("ascii") + "\n")
        payload = _exact_result(args.n, args.k, args.s, h, _open_cache(args.cache), args.jobs, **kwargs)
    finally:
        for handle in (stream, sink):
            if handle is not None:
                handle.close()
    _emit(out, _dump(payload))
    return EXIT_OK


def _cmd_enumerate(args, out) -> int:
    keep = None
    if args.k is not None:
        keep = KFreePredicate(_pattern_arg(args.pattern), args.k)
    graphs: List[Graph] = []
    stats = enumerate_graphs(args.n, keep=keep, visit=graphs.append)
    logger.info(f"Enumeration took {stats.elapsed:.2f}s, pruned {stats.nodes_pruned} nodes")
    if args.emit == "count":
        _emit(out, str(stats.classes_visited))
    else:
        for line in format_graph6_stream(graphs):
            out.write(line)
    return EXIT_OK


# --- verify / table --------------------------------------------------------


def _cmd_verify(args, out) -> int:
    if args.target == "conjecture":
        report = verify_conjecture(args.n, args.k, args.s, jobs=args.jobs, progress=args.progress)
        record_verification("conjecture", report.model_dump(mode="json"))
        if args.format == "csv":
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            writer.writerow(report.csv_row())
            out.write(buffer.getvalue())
        else:
            _emit(out, _dump(report.model_dump(mode="json")))
    else:
        report = verify_bounds(
            args.n, args.k, args.s, _pattern_arg(args.pattern), jobs=args.jobs, convention=args.convention
        )
        record_verification("bounds", report.model_dump(mode="json"))
        _emit(out, _dump(report.model_dump(mode="json")))
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _table_row(n: int, k: int, s: int, exact_max_n: int, cache: Optional[ResultCache], jobs: int) -> dict:
    row = {"n": n, "k": k, "s": s, "formula": None, "construction": None, "exact": None, "lower": None, "upper": None}
    if n >= 3 * k and s >= 3:
        row["formula"] = conjecture_value(n, k, s)
    if n >= k:
        row["construction"] = max(construction_counts(n, k, s).values())
    if n >= 3 * k:
        row["lower"] = thm11_lower(n, k, s, 3, ex_p3_closed)[0]
        if s >= 1:
            row["upper"] = thm12_upper(n, k, s, 3, ex_p3_closed)
    if n <= exact_max_n:
        row["exact"] = _exact_result(n, k, s, p3_pattern(), cache, jobs)["value"]
    return row


def _row_ok(row: dict) -> bool:
    if row["formula"] is not None and row["construction"] is not None and row["formula"] != row["construction"]:
        return False
    exact = row["exact"]
    if exact is None:
        return True
    if row["lower"] is not None and exact < row["lower"]:
        return False
    return row["upper"] is None or exact <= row["upper"]


def _cmd_table(args, out) -> int:
    if args.n_from > args.n_to:
        raise UsageError(f"--n-from {args.n_from} exceeds --n-to {args.n_to}")
    exact_max_n = settings.TABLE_EXACT_MAX_N if args.exact_max_n is None else args.exact_max_n
    cache = _open_cache(args.cache)
    rows = [_table_row(n, args.k, args.s, exact_max_n, cache, args.jobs) for n in range(args.n_from, args.n_to + 1)]
    if args.format == "json":
        _emit(out, _dump(rows))
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(TABLE_COLUMNS)
        for row in rows:
            writer.writerow(["" if row[c] is None else row[c] for c in TABLE_COLUMNS])
        out.write(buffer.getvalue())
    bad = [row["n"] for row in rows if not _row_ok(row)]
    if bad:
        logger.warning(f"Table rows failing their checks: n in {bad}")
        return EXIT_CHECK_FAILED
    return EXIT_OK


# --- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="turan-workbench", description="Generalized Turán numbers ex(n, K_s, kH).")
    parser.add_argument("-v", "--verbose", action="store_true", help="log timings and statistics to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_pattern(p):
        p.add_argument("--pattern", default=None, help="graph6 of the connected pattern H (default P3)")

    def with_jobs(p):
        p.add_argument("--jobs", type=int, default=settings.DEFAULT_JOBS)
        p.add_argument("--progress", action="store_true")

    p = sub.add_parser("formula", help="evaluate a closed formula")
    p.add_argument(
        "name",
        choices=["f", "g", "luo", "conjecture", "regime", "k-plus-one", "thm11", "thm12", "luo-bound"],
    )
    p.add_argument("values", type=int, nargs="*")
    p.add_argument("--convention", choices=CONVENTIONS, default="standard")
    with_pattern(p)
    p.set_defaults(handler=_cmd_formula)

    p = sub.add_parser("construct", help="build an extremal construction")
    p.add_argument("kind", choices=["union", "join", "fan", "thm11-union", "thm11-join"])
    p.add_argument("values", type=int, nargs="*")
    p.add_argument("--emit", choices=["graph6", "stats"], default="graph6")
    p.add_argument("--s-from", type=int, default=1)
    p.add_argument("--s-to", type=int, default=6)
    with_pattern(p)
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("count", help="count s-cliques")
    p.add_argument("--graph", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--through", default=None, help="comma-separated root vertices")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("pack", help="packing number or k-copy test")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, default=None)
    with_pattern(p)
    p.set_defaults(handler=_cmd_pack)

    p = sub.add_parser("exact", help="exact ex(n, K_s, kH) by exhaustive search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--cache", default=None)
    p.add_argument("--no-prune", action="store_true", help="enumerate everything and filter afterwards")
    p.add_argument("--from-graph6", default=None, help="read the candidate classes from a graph6 file")
    p.add_argument("--emit-classes", default=None, help="write every kH-free class as graph6 to this file")
    with_pattern(p)
    with_jobs(p)
    p.set_defaults(handler=_cmd_exact)

    p = sub.add_parser("enumerate", help="list isomorphism classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="keep only graphs without k disjoint copies")
    p.add_argument("--emit", choices=["graph6", "count"], default="graph6")
    with_pattern(p)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("verify", help="check the conjecture or the bound chain")
    p.add_argument("target", choices=["conjecture", "bounds"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--convention", choices=CONVENTIONS, default="standard")
    with_pattern(p)
    with_jobs(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("table", help="formula, construction and exact values over a range of n")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--exact-max-n", type=int, default=None)
    p.add_argument("--cache", default=None)
    with_jobs(p)
    p.set_defaults(handler=_cmd_table)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    """Run one command; returns the exit status."""
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            logging.getLogger().setLevel(logging.INFO)
        return args.handler(args, out)
    except UsageError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    except (WorkbenchError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    logging.basicConfig(
        level=settings.LOG_LEVEL,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    ensure_tracer()
    sys.exit(run())


if __name__ == "__main__":
    main()

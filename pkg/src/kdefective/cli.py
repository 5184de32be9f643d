"""Command-line front end.

Modes: solve (exact search), heuristic (initial-solution heuristics only),
oracle (exhaustive reference search for small graphs), topr (greedy
diversified top-r cover), gamma (search-tree growth constant), and reduce
(preprocessing only, reporting the shrunken graph size).

Exit codes: 0 on success (including a time-limited, non-optimal solve), 2 on
input or parse errors, 3 on invalid flags or flag combinations.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field, fields
from time import perf_counter
from typing import Any, Sequence

from .bounds import greedy_coloring, ub_coloring_basic
from .config import SearchStats, SolverConfig
from .graph import EdgeListFormatError, Graph, degeneracy_ordering, load_edge_list
from .instance import Instance
from .oracle import OracleBudget, OracleBudgetError, brute_force_max, gamma_k
from .preprocess import degen, degen_opt, global_reduce_with_ids
from .search import kdc, top_r_diversified

FORMAT_VERSION = 1


class _UsageError(Exception):
    pass


@dataclass
class RunReport:
    """Everything one invocation reports, serializable in both formats."""

    mode: str
    format_version: int = FORMAT_VERSION
    input: str | None = None
    k: int | None = None
    size: int | None = None
    vertices: list[str] | None = None
    optimal: bool | None = None
    value: float | None = None
    r: int | None = None
    cliques: list[dict[str, Any]] | None = None
    disjoint: bool | None = None
    eq1_root_bound: int | None = None
    stats: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if value is not None:
                out[f.name] = value
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "RunReport":
        return cls(**data)


def _stats_dict(stats: SearchStats) -> dict[str, Any]:
    out: dict[str, Any] = {
        "nodes": stats.nodes,
        "max_depth": stats.max_depth,
        "rule_fires": dict(stats.rule_fires),
        "improvements": list(stats.improvements),
        "elapsed_s": stats.elapsed,
    }
    if stats.preprocess is not None:
        out["preprocess"] = {
            "initial_size": stats.preprocess.initial_size,
            "reduced_n": stats.preprocess.reduced_n,
            "reduced_m": stats.preprocess.reduced_m,
            "elapsed_s": stats.preprocess.elapsed,
        }
    return out


def _bool_text(value: bool) -> str:
    return "true" if value else "false"


def emit_report(report: RunReport, fmt: str) -> str:
    """Render a report as key:value text or as a single JSON record."""
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2, sort_keys=True)
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines: list[str] = []

    def emit(key: str, value: Any) -> None:
        if value is None:
            return
        if isinstance(value, bool):
            value = _bool_text(value)
        elif isinstance(value, list):
            value = " ".join(str(item) for item in value)
        lines.append(f"{key}: {value}")

    emit("format_version", report.format_version)
    emit("mode", report.mode)
    emit("input", report.input)
    emit("k", report.k)
    emit("r", report.r)
    emit("size", report.size)
    emit("optimal", report.optimal)
    emit("value", report.value)
    emit("eq1_root_bound", report.eq1_root_bound)
    emit("vertices", report.vertices)
    if report.cliques is not None:
        emit("cliques", len(report.cliques))
        for i, clique in enumerate(report.cliques, start=1):
            emit(f"clique_{i}_size", clique["size"])
            emit(f"clique_{i}_vertices", clique["vertices"])
    emit("disjoint", report.disjoint)
    stats = report.stats
    if stats:
        for key in ("nodes", "max_depth"):
            emit(key, stats.get(key))
        rule_fires = stats.get("rule_fires")
        if rule_fires:
            emit("rule_fires", [f"{name}={count}" for name, count in sorted(rule_fires.items())])
        if "improvements" in stats:
            emit("improvements", stats["improvements"])
        pre = stats.get("preprocess")
        if pre:
            emit("initial_size", pre.get("initial_size"))
            emit("reduced_n", pre.get("reduced_n"))
            emit("reduced_m", pre.get("reduced_m"))
            emit("preprocess_elapsed_s", pre.get("elapsed_s"))
        emit("elapsed_s", stats.get("elapsed_s"))
    return "\n".join(lines) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D401 - argparse hook
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="kdefective", description="Exact maximum k-defective clique solver")
    sub = parser.add_subparsers(dest="mode", required=True)

    def add_common(p: _Parser, with_graph: bool = True) -> None:
        p.add_argument("--k", type=int, required=True, help="non-edge budget")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if with_graph:
            p.add_argument("path", help="edge-list file")

    solve = sub.add_parser("solve", help="exact maximum k-defective clique")
    add_common(solve)
    solve.add_argument("--time-limit", type=float, default=None, help="seconds; best-so-far on expiry")
    solve.add_argument("--no-ub1", action="store_true", help="disable the coloring bound")
    solve.add_argument("--no-rr34", action="store_true", help="disable the two lb-driven candidate rules")
    solve.add_argument("--degen-only", action="store_true",
                       help="plain suffix heuristic and no common-neighbor edge shrink")
    solve.add_argument("--compare-eq1", action="store_true",
                       help="also report the per-class capped coloring bound at the root")

    heuristic = sub.add_parser("heuristic", help="initial-solution heuristic only")
    add_common(heuristic)
    heuristic.add_argument("--opt", action="store_true", help="per-vertex neighborhood variant")

    oracle = sub.add_parser("oracle", help="exhaustive reference search (small graphs)")
    add_common(oracle)
    oracle.add_argument("--max-n", type=int, default=30, help="vertex cap for the exhaustive search")

    topr = sub.add_parser("topr", help="greedy diversified top-r cover")
    add_common(topr)
    topr.add_argument("--r", type=int, required=True, help="number of cliques to report")
    topr.add_argument("--time-limit", type=float, default=None)
    topr.add_argument("--no-ub1", action="store_true")
    topr.add_argument("--no-rr34", action="store_true")
    topr.add_argument("--degen-only", action="store_true")

    gamma = sub.add_parser("gamma", help="search-tree growth constant")
    gamma.add_argument("--k", type=int, required=True)
    gamma.add_argument("--format", choices=("text", "json"), default="text")

    reduce_p = sub.add_parser("reduce", help="preprocessing only; report the reduced size")
    add_common(reduce_p)
    reduce_p.add_argument("--degen-only", action="store_true")

    return parser


def _load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as handle:
        graph, _ = load_edge_list(handle)
    return graph


def _labels(graph: Graph, vertices: Sequence[int]) -> list[str]:
    return [str(graph.labels[v]) for v in vertices]


def _config_from_args(args: argparse.Namespace) -> SolverConfig:
    return SolverConfig(
        k=args.k,
        time_limit=getattr(args, "time_limit", None),
        enable_ub1=not getattr(args, "no_ub1", False),
        enable_rr3=not getattr(args, "no_rr34", False),
        enable_rr4=not getattr(args, "no_rr34", False),
        enable_rr6=not getattr(args, "degen_only", False),
        use_degen_opt=not getattr(args, "degen_only", False),
    )


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv, execute the selected mode, print the report to stdout."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.k < 0:
            raise _UsageError("--k must be non-negative")
        if getattr(args, "r", None) is not None and args.r < 1:
            raise _UsageError("--r must be at least 1")
        if getattr(args, "time_limit", None) is not None and args.time_limit <= 0:
            raise _UsageError("--time-limit must be positive")
        if getattr(args, "max_n", None) is not None and args.max_n < 0:
            raise _UsageError("--max-n must be non-negative")
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3

    try:
        report = _execute(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (FileNotFoundError, IsADirectoryError, PermissionError) as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return 2
    except EdgeListFormatError as exc:
        print(f"error: malformed edge list: {exc}", file=sys.stderr)
        return 2

    sys.stdout.write(emit_report(report, args.format))
    return 0


def _execute(args: argparse.Namespace) -> RunReport:
    mode = args.mode
    if mode == "gamma":
        return RunReport(mode="gamma", k=args.k, value=gamma_k(args.k))

    graph = _load_graph(args.path)

    if mode == "solve":
        config = _config_from_args(args)
        result = kdc(graph, config)
        report = RunReport(
            mode="solve",
            input=args.path,
            k=args.k,
            size=result.size,
            vertices=_labels(graph, result.best),
            optimal=result.optimal,
            stats=_stats_dict(result.stats),
        )
        if args.compare_eq1:
            report.eq1_root_bound = _eq1_root_bound(graph, args.k)
        return report

    if mode == "heuristic":
        start = perf_counter()
        clique = degen_opt(graph, args.k) if args.opt else degen(graph, args.k)
        elapsed = perf_counter() - start
        return RunReport(
            mode="heuristic",
            input=args.path,
            k=args.k,
            size=len(clique),
            vertices=_labels(graph, clique),
            stats={"elapsed_s": elapsed},
        )

    if mode == "oracle":
        budget = OracleBudget(max_n=args.max_n)
        start = perf_counter()
        try:
            clique = brute_force_max(graph, args.k, budget)
        except OracleBudgetError as exc:
            raise _UsageError(str(exc)) from exc
        elapsed = perf_counter() - start
        return RunReport(
            mode="oracle",
            input=args.path,
            k=args.k,
            size=len(clique),
            vertices=_labels(graph, clique),
            optimal=True,
            stats={"elapsed_s": elapsed},
        )

    if mode == "topr":
        config = _config_from_args(args)
        start = perf_counter()
        cliques = top_r_diversified(graph, args.k, args.r, config)
        elapsed = perf_counter() - start
        return RunReport(
            mode="topr",
            input=args.path,
            k=args.k,
            r=args.r,
            cliques=[
                {"size": len(clique), "vertices": _labels(graph, clique)} for clique in cliques
            ],
            disjoint=True,
            stats={"elapsed_s": elapsed},
        )

    if mode == "reduce":
        start = perf_counter()
        use_opt = not args.degen_only
        initial = degen_opt(graph, args.k) if use_opt else degen(graph, args.k)
        reduced, _ = global_reduce_with_ids(
            graph, len(initial), args.k, use_truss=not args.degen_only
        )
        elapsed = perf_counter() - start
        return RunReport(
            mode="reduce",
            input=args.path,
            k=args.k,
            stats={
                "preprocess": {
                    "initial_size": len(initial),
                    "reduced_n": reduced.n,
                    "reduced_m": reduced.m,
                    "elapsed_s": elapsed,
                },
                "elapsed_s": elapsed,
            },
        )

    raise _UsageError(f"unknown mode {mode!r}")


def _eq1_root_bound(graph: Graph, k: int) -> int:
    if graph.n == 0:
        return 0
    info = degeneracy_ordering(graph)
    partition = greedy_coloring(Instance(graph), info)
    return ub_coloring_basic(0, k, partition)


def main() -> None:
    sys.exit(run())

"""Branch-and-bound engines for the maximum k-defective clique problem.

Two engines share the same instance machinery:

* :func:`branch_and_bound_t` is the minimal recursion: rr1/rr2, a leaf
  check, and the branching rule.  It carries the complexity argument and
  serves as a differential-testing partner.
* :func:`kdc` is the practical solver: an initial heuristic solution, a
  global graph shrink, and a search that additionally runs rr3/rr4/rr5 and
  prunes on upper bounds.

Branching picks a candidate that already has a non-neighbor in S whenever
one exists (most non-neighbors first, ties to the smallest id); when every
candidate is fully adjacent to S it falls back to the candidate of minimum
live degree.  Left branches include the chosen vertex, right branches
delete it.
"""

from __future__ import annotations

import sys
from contextlib import contextmanager
from dataclasses import replace
from time import perf_counter

from .bounds import combined_upper_bound
from .config import PreprocessReport, SearchStats, SolverConfig, SolverResult
from .graph import DegeneracyInfo, Graph, degeneracy_ordering, induced_subgraph_with_ids
from .instance import Instance
from .preprocess import degen, degen_opt, global_reduce_with_ids
from .reductions import ReductionLog, apply_all, rr1_rr2_fixpoint


class _TimeLimitExpired(Exception):
    pass


@contextmanager
def _recursion_headroom(n: int):
    """Raise the interpreter recursion limit for a search over n vertices."""
    needed = min(8 * n + 4000, 200_000)
    previous = sys.getrecursionlimit()
    if needed > previous:
        sys.setrecursionlimit(needed)
    try:
        yield
    finally:
        sys.setrecursionlimit(previous)


def select_branch_vertex(inst: Instance) -> int:
    """Branching rule: prefer a candidate with a non-neighbor in S.

    Among those, take the largest non-neighbor count (ties to the smallest
    id); if every candidate is fully adjacent to S, take the candidate of
    minimum live degree (ties to the smallest id).
    """
    if not inst.cand:
        raise ValueError("cannot branch on an instance without candidates")
    s_size = len(inst.s_stack)
    deg_to_s = inst.deg_to_s
    best = -1
    best_key: tuple[int, int] | None = None
    for v in inst.cand:
        nn = s_size - deg_to_s[v]
        if nn > 0:
            key = (-nn, v)
            if best_key is None or key < best_key:
                best_key = key
                best = v
    if best >= 0:
        return best
    live_degree = inst.live_degree
    return min(inst.cand, key=lambda v: (live_degree[v], v))


def branch_and_bound_t(inst: Instance, k: int, best: list[int] | tuple[int, ...] = ()) -> list[int]:
    """Minimal exact search: rr1/rr2 fixpoint, leaf check, branch, recurse.

    No lb-based rules and no bounds; every leaf whose live graph fits the
    budget updates the incumbent.  Returns the best vertex set found, which
    is a maximum k-defective clique of the instance.
    """
    result = sorted(best)

    def rec() -> None:
        nonlocal result
        mark = inst.mark()
        rr1_rr2_fixpoint(inst, k)
        if inst.live_nonedges() <= k:
            if inst.n_live() > len(result):
                result = inst.live_vertices()
            inst.undo_to(mark)
            return
        b = select_branch_vertex(inst)
        branch_mark = inst.mark()
        inst.add_to_s(b)
        rec()
        inst.undo_to(branch_mark)
        inst.remove_vertex(b)
        rec()
        inst.undo_to(mark)

    with _recursion_headroom(inst.graph.n):
        rec()
    return result


def _tally(rule_fires: dict[str, int], log: ReductionLog) -> None:
    for rule, action, _ in log.actions:
        if action != "prune":
            rule_fires[rule] += 1


class _Engine:
    """One full-rule search over a fixed (already reduced) graph."""

    def __init__(
        self,
        config: SolverConfig,
        info: DegeneracyInfo,
        lb: int,
        deadline: float | None,
        stats: SearchStats,
    ):
        self.config = config
        self.k = config.k
        self.info = info
        self.lb = lb
        self.best: list[int] | None = None
        self.deadline = deadline
        self.stats = stats
        self.checks_left = config.node_check_interval
        self.timed_out = False

    def run(self, inst: Instance) -> None:
        try:
            self._node(inst, None, 0, None, 0)
        except _TimeLimitExpired:
            self.timed_out = True

    def _record(self, size: int, vertices) -> None:
        if size > self.lb:
            self.lb = size
            self.best = sorted(vertices)
            self.stats.improvements.append(size)

    def _node(
        self,
        inst: Instance,
        last_added: int | None,
        depth: int,
        left_parent_size: int | None,
        chain: int,
    ) -> None:
        stats = self.stats
        stats.nodes += 1
        if depth > stats.max_depth:
            stats.max_depth = depth
        self.checks_left -= 1
        if self.checks_left <= 0:
            self.checks_left = self.config.node_check_interval
            if self.deadline is not None and perf_counter() > self.deadline:
                raise _TimeLimitExpired
        cfg = self.config
        mark = inst.mark()
        try:
            log = apply_all(
                inst,
                self.k,
                self.lb,
                last_added,
                use_rr3=cfg.enable_rr3,
                use_rr4=cfg.enable_rr4,
            )
            _tally(stats.rule_fires, log)
            # S only ever grows within a node and is always a valid solution.
            if len(inst.s_stack) > self.lb:
                self._record(len(inst.s_stack), inst.s_stack)
            if log.pruned:
                stats.rule_fires["prune_rr5"] += 1
                return
            if cfg.debug_checks:
                self._check_reduced_state(inst)
                my_size = inst.num_candidates()
                if left_parent_size is not None and my_size == left_parent_size - 1:
                    chain += 1
                    assert chain <= self.k, (
                        f"{chain} consecutive include-branches shrank the instance "
                        f"by exactly one vertex each; at most k={self.k} are possible"
                    )
                else:
                    chain = 0
            if inst.live_nonedges() <= self.k:
                self._record(inst.n_live(), inst.live_vertices())
                return
            bound = combined_upper_bound(inst, cfg, self.lb, self.info)
            if bound <= self.lb:
                stats.rule_fires["prune_bound"] += 1
                return
            b = select_branch_vertex(inst)
            my_size = inst.num_candidates()
            branch_mark = inst.mark()
            inst.add_to_s(b)
            self._node(inst, b, depth + 1, my_size, chain)
            inst.undo_to(branch_mark)
            inst.remove_vertex(b)
            pivot = inst.s_stack[-1] if inst.s_stack else None
            self._node(inst, pivot, depth + 1, None, 0)
        finally:
            inst.undo_to(mark)

    def _check_reduced_state(self, inst: Instance) -> None:
        # Post-fixpoint property: every candidate fits the budget and has at
        # least two live non-neighbors.
        n_live = inst.n_live()
        s_size = len(inst.s_stack)
        budget = self.k - inst.nonedges_in_s
        for v in inst.cand:
            assert s_size - inst.deg_to_s[v] <= budget, "candidate exceeds budget after reductions"
            assert inst.live_degree[v] < n_live - 2, "candidate with fewer than two live non-neighbors"


def kdc(graph: Graph, config: SolverConfig) -> SolverResult:
    """Exact maximum k-defective clique of ``graph``.

    Pipeline: heuristic initial solution, global shrink driven by its size,
    then branch-and-bound on the survivor.  With a time limit the result may
    come back with ``optimal=False`` and the best solution found so far.
    """
    start = perf_counter()
    deadline = start + config.time_limit if config.time_limit is not None else None
    k = config.k

    initial = degen_opt(graph, k) if config.use_degen_opt else degen(graph, k)
    lb = len(initial)
    reduced, ids = global_reduce_with_ids(graph, lb, k, use_truss=config.enable_rr6)
    pre = PreprocessReport(
        initial_clique=list(initial),
        initial_size=lb,
        reduced_n=reduced.n,
        reduced_m=reduced.m,
        elapsed=perf_counter() - start,
    )
    stats = SearchStats(preprocess=pre)

    best = list(initial)
    timed_out = False
    if reduced.n > 0:
        if deadline is not None and perf_counter() > deadline:
            timed_out = True
        else:
            info = degeneracy_ordering(reduced)
            engine = _Engine(config, info, lb, deadline, stats)
            with _recursion_headroom(reduced.n):
                engine.run(Instance(reduced))
            timed_out = engine.timed_out
            if engine.best is not None:
                best = sorted(ids[v] for v in engine.best)
    stats.elapsed = perf_counter() - start
    return SolverResult(best=sorted(best), size=len(best), optimal=not timed_out, stats=stats)


def top_r_diversified(
    graph: Graph, k: int, r: int, config: SolverConfig | None = None
) -> list[list[int]]:
    """Greedy cover: repeatedly solve, report, and delete the found clique.

    Stops after r cliques or when the working graph runs out of vertices.
    The returned sets are pairwise disjoint and each is a valid k-defective
    clique of the input graph.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    cfg = config if config is not None else SolverConfig(k=k)
    if cfg.k != k:
        cfg = replace(cfg, k=k)
    working = graph
    ids = list(range(graph.n))
    found: list[list[int]] = []
    for _ in range(r):
        if working.n == 0:
            break
        result = kdc(working, cfg)
        if result.size == 0:
            break
        found.append(sorted(ids[v] for v in result.best))
        chosen = set(result.best)
        keep = [v for v in range(working.n) if v not in chosen]
        working, kept = induced_subgraph_with_ids(working, keep)
        ids = [ids[v] for v in kept]
    return found

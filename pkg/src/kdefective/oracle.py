"""Definition-level ground truth: validity checks, exhaustive maxima, and the
search-tree growth constant.

The exhaustive routines deliberately share no code with the solver's rules or
bounds, so agreement between the two is meaningful evidence rather than a
tautology.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, count_non_edges


@dataclass(frozen=True)
class OracleBudget:
    """Caps for the exhaustive search: vertex count and recursion nodes."""

    max_n: int = 30
    max_nodes: int | None = None


class OracleBudgetError(RuntimeError):
    """The exhaustive search exceeded its configured budget."""


def is_k_defective(graph: Graph, vertices: Iterable[int], k: int) -> bool:
    """True iff the set misses at most k edges from being complete."""
    return count_non_edges(graph, vertices) <= k


def _adjacency_masks(graph: Graph) -> list[int]:
    masks = [0] * graph.n
    for u in range(graph.n):
        bits = 0
        for w in graph.adj[u]:
            bits |= 1 << w
        masks[u] = bits
    return masks


def _bits(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def brute_force_max(graph: Graph, k: int, budget: OracleBudget | None = None) -> list[int]:
    """Exact maximum k-defective clique by include/exclude recursion.

    The only cut is the validity check (a branch whose partial set already
    misses more than k edges is dead); no solver rule or bound is consulted.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    budget = budget or OracleBudget()
    if graph.n > budget.max_n:
        raise OracleBudgetError(f"graph has {graph.n} vertices, budget allows {budget.max_n}")
    n = graph.n
    adjm = _adjacency_masks(graph)
    max_nodes = budget.max_nodes
    best_mask = 0
    best_size = 0
    nodes = 0

    def rec(i: int, smask: int, ssize: int, nonedges: int) -> None:
        nonlocal best_mask, best_size, nodes
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise OracleBudgetError(f"exceeded node budget {max_nodes}")
        if i == n:
            if ssize > best_size:
                best_size = ssize
                best_mask = smask
            return
        added = ssize - (adjm[i] & smask).bit_count()
        if nonedges + added <= k:
            rec(i + 1, smask | (1 << i), ssize + 1, nonedges + added)
        rec(i + 1, smask, ssize, nonedges)

    rec(0, 0, 0, 0)
    return _bits(best_mask)


def brute_force_max_sizes(graph: Graph, ks: Sequence[int], budget: OracleBudget | None = None) -> dict[int, int]:
    """Maximum sizes for several budgets from one exhaustive recursion.

    Runs the same include/exclude enumeration as :func:`brute_force_max` at
    ``max(ks)`` while recording, per exact non-edge count, the largest set
    seen; the answer for a smaller budget is the prefix maximum.
    """
    if not ks:
        return {}
    if any(k < 0 for k in ks):
        raise ValueError("k must be non-negative")
    budget = budget or OracleBudget()
    if graph.n > budget.max_n:
        raise OracleBudgetError(f"graph has {graph.n} vertices, budget allows {budget.max_n}")
    kmax = max(ks)
    n = graph.n
    adjm = _adjacency_masks(graph)
    best_at = [0] * (kmax + 1)
    max_nodes = budget.max_nodes
    nodes = 0

    def rec(i: int, smask: int, ssize: int, nonedges: int) -> None:
        nonlocal nodes
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise OracleBudgetError(f"exceeded node budget {max_nodes}")
        if i == n:
            if ssize > best_at[nonedges]:
                best_at[nonedges] = ssize
            return
        added = ssize - (adjm[i] & smask).bit_count()
        if nonedges + added <= kmax:
            rec(i + 1, smask | (1 << i), ssize + 1, nonedges + added)
        rec(i + 1, smask, ssize, nonedges)

    rec(0, 0, 0, 0)
    out = {}
    running = 0
    prefix = []
    for e in range(kmax + 1):
        running = max(running, best_at[e])
        prefix.append(running)
    for k in ks:
        out[k] = prefix[k]
    return out


def brute_force_max_containing(
    graph: Graph,
    required: Iterable[int],
    k: int,
    allowed: Iterable[int] | None = None,
    budget: OracleBudget | None = None,
) -> list[int] | None:
    """Exact maximum k-defective clique containing ``required`` inside ``allowed``.

    Returns None when ``required`` itself misses more than k edges.  This is
    the instance-level oracle: ``allowed`` defaults to all vertices.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    budget = budget or OracleBudget()
    if graph.n > budget.max_n:
        raise OracleBudgetError(f"graph has {graph.n} vertices, budget allows {budget.max_n}")
    req = sorted(set(required))
    base_nonedges = count_non_edges(graph, req)
    if base_nonedges > k:
        return None
    adjm = _adjacency_masks(graph)
    smask0 = 0
    for v in req:
        smask0 |= 1 << v
    if allowed is not None:
        pool = sorted(set(allowed) - set(req))
    else:
        pool = [v for v in range(graph.n) if not (smask0 >> v) & 1]
    best_mask = smask0
    best_size = len(req)

    def rec(i: int, smask: int, ssize: int, nonedges: int) -> None:
        nonlocal best_mask, best_size
        if i == len(pool):
            if ssize > best_size:
                best_size = ssize
                best_mask = smask
            return
        v = pool[i]
        added = ssize - (adjm[v] & smask).bit_count()
        if nonedges + added <= k:
            rec(i + 1, smask | (1 << v), ssize + 1, nonedges + added)
        rec(i + 1, smask, ssize, nonedges)

    rec(0, smask0, len(req), base_nonedges)
    return _bits(best_mask)


def gamma_k(k: int) -> float:
    """Base of the search-tree size bound: the unique root in (1, 2) of
    x^(k+2) = x^(k+1) + ... + x + 1.

    Bisection runs on this geometric-series form because the equivalent
    polynomial x^(k+3) - 2x^(k+2) + 1 has a spurious root at x = 1; the
    series form is strictly negative at 1 and positive at 2.
    """
    if k < 0:
        raise ValueError("k must be non-negative")

    def value(x: float) -> float:
        total = 0.0
        for _ in range(k + 2):
            total = total * x + 1.0
        return x ** (k + 2) - total

    lo, hi = 1.0, 2.0
    for _ in range(200):
        mid = (lo + hi) / 2.0
        if value(mid) < 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-12:
            break
    return (lo + hi) / 2.0

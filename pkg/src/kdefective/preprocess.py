"""Initial-solution heuristics and whole-graph shrinking.

``degen`` takes the longest suffix of a degeneracy ordering that stays within
the non-edge budget; ``degen_opt`` additionally tries, for every vertex u, the
same trick inside the subgraph of u's higher-ranked neighbors and keeps the
largest outcome.  ``global_reduce`` then uses the resulting lower bound to
strip the input graph: vertices of degree below lb - k can never appear in a
larger solution, and edges with fewer than lb - k - 1 common neighbors cannot
be inside one either.
"""

from __future__ import annotations

from .graph import (
    DegeneracyInfo,
    Graph,
    degeneracy_ordering,
    induced_subgraph_with_ids,
    k_core,
    k_truss,
)


def _budget_suffix(graph: Graph, order: list[int], k: int) -> list[int]:
    """Longest suffix of ``order`` whose induced non-edge count is <= k.

    Extending the suffix leftward only ever adds non-edges, so the first
    violation is final.
    """
    taken = bytearray(graph.n)
    adj = graph.adj
    nonedges = 0
    size = 0
    cut = len(order)
    for i in range(len(order) - 1, -1, -1):
        v = order[i]
        inside = 0
        for w in adj[v]:
            if taken[w]:
                inside += 1
        added = size - inside
        if nonedges + added > k:
            break
        nonedges += added
        taken[v] = 1
        size += 1
        cut = i
    return order[cut:]


def degen(graph: Graph, k: int, info: DegeneracyInfo | None = None) -> list[int]:
    """Heuristic solution: longest budget-respecting suffix of a degeneracy
    ordering.  Runs in O(n + m) given the ordering."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if graph.n == 0:
        return []
    if info is None:
        info = degeneracy_ordering(graph)
    return sorted(_budget_suffix(graph, info.order, k))


def degen_opt(graph: Graph, k: int) -> list[int]:
    """Heuristic solution: best of ``degen`` on the whole graph and, for each
    vertex u, ``degen`` inside u's higher-ranked neighborhood plus u itself.

    Vertices are visited in degeneracy order and the incumbent only updates
    on strict improvement, so earlier vertices win ties.  Neighborhoods too
    small to beat the incumbent are skipped outright; they cannot change the
    outcome.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if graph.n == 0:
        return []
    info = degeneracy_ordering(graph)
    best = degen(graph, k, info)
    rank = info.rank
    adj = graph.adj
    for u in info.order:
        ru = rank[u]
        nplus = [w for w in adj[u] if rank[w] > ru]
        if len(nplus) + 1 <= len(best):
            continue
        sub, ids = induced_subgraph_with_ids(graph, nplus)
        inner = degen(sub, k)
        candidate = sorted([u] + [ids[v] for v in inner])
        if len(candidate) > len(best):
            best = candidate
    return best


def global_reduce(graph: Graph, lb: int, k: int, *, use_truss: bool = True) -> Graph:
    """Shrink ``graph`` while keeping every solution of size > lb intact."""
    reduced, _ = global_reduce_with_ids(graph, lb, k, use_truss=use_truss)
    return reduced


def global_reduce_with_ids(
    graph: Graph, lb: int, k: int, *, use_truss: bool = True
) -> tuple[Graph, list[int]]:
    """Like :func:`global_reduce` but also returns new-id -> input-id.

    The degree pass runs first (cheap), then the common-neighbor pass on the
    survivor, then one more degree pass because edge removals create new
    low-degree vertices.  Thresholds at or below the trivial level cannot
    prune: with lb <= k even an isolated vertex can sit inside a valid
    solution of size lb + 1, so in that regime the graph is returned as is.
    """
    if lb < 0 or k < 0:
        raise ValueError("lb and k must be non-negative")
    core_level = lb - k
    ids = list(range(graph.n))
    g = graph
    if core_level <= 0:
        return g, ids

    keep = k_core(g, core_level)
    if len(keep) < g.n:
        g, kept = induced_subgraph_with_ids(g, keep)
        ids = [ids[v] for v in kept]

    truss_level = lb - k + 1
    if use_truss and truss_level > 2 and g.n:
        edges = k_truss(g, truss_level)
        if len(edges) < g.m:
            touched = sorted({v for e in edges for v in e})
            index = {v: i for i, v in enumerate(touched)}
            remapped = [(index[u], index[v]) for u, v in edges]
            labels = [g.labels[v] for v in touched]
            ids = [ids[v] for v in touched]
            g = Graph(len(touched), remapped, labels)
            keep = k_core(g, core_level)
            if len(keep) < g.n:
                g, kept = induced_subgraph_with_ids(g, keep)
                ids = [ids[v] for v in kept]
    return g, ids

"""Shared fixtures and generators for the test suite.

The three worked graphs used throughout (a 12-vertex two-component graph, a
7-vertex heuristic example, and an 11-vertex coloring-bound example) are
transcribed here once; vertex names v1..vN map to ids 0..N-1.
"""

from __future__ import annotations

import random

from kdefective import Graph, Instance

# 12 vertices: a dense 7-vertex part (v1..v7) and a 5-clique (v8..v12).
FIG2_EDGES_NAMED = [
    ("v1", "v2"), ("v1", "v3"), ("v1", "v4"), ("v1", "v6"), ("v1", "v7"),
    ("v2", "v3"), ("v2", "v5"), ("v2", "v6"),
    ("v3", "v4"), ("v3", "v5"), ("v3", "v6"),
    ("v4", "v5"), ("v4", "v6"),
    ("v5", "v6"), ("v5", "v7"),
    ("v6", "v7"),
    ("v8", "v9"), ("v8", "v10"), ("v8", "v11"), ("v8", "v12"),
    ("v9", "v10"), ("v9", "v11"), ("v9", "v12"),
    ("v10", "v11"), ("v10", "v12"),
    ("v11", "v12"),
]

# 7 vertices; the plain suffix heuristic finds size 3 at k=1 while the
# per-vertex variant finds {v1, v2, v3, v4}.
FIG6_EDGES_NAMED = [
    ("v1", "v2"), ("v1", "v3"), ("v1", "v4"),
    ("v2", "v3"), ("v2", "v5"),
    ("v3", "v4"), ("v3", "v6"),
    ("v4", "v7"),
    ("v5", "v6"), ("v5", "v7"),
    ("v6", "v7"),
]


def _of_named(named: list[tuple[str, str]]) -> Graph:
    names = sorted({x for e in named for x in e}, key=lambda s: int(s[1:]))
    index = {name: i for i, name in enumerate(names)}
    edges = [(index[a], index[b]) for a, b in named]
    return Graph(len(names), edges, labels=names)


def fig2_graph() -> Graph:
    return _of_named(FIG2_EDGES_NAMED)


def fig2_text() -> str:
    return "".join(f"{a} {b}\n" for a, b in FIG2_EDGES_NAMED)


def fig6_graph() -> Graph:
    return _of_named(FIG6_EDGES_NAMED)


def v(*names: int) -> list[int]:
    """Vertex ids for 1-based v-names: v(1, 5) -> [0, 4]."""
    return [name - 1 for name in names]


def tripartite_instance() -> tuple[Graph, Instance, list[list[int]]]:
    """11 vertices: a complete 3-partite graph on parts of size 3, plus two
    isolated vertices forming the partial solution.

    The partial solution has one internal non-edge and every candidate has
    two non-neighbors in it.
    """
    parts = [[0, 1, 2], [3, 4, 5], [6, 7, 8]]
    edges = []
    for i, part in enumerate(parts):
        for other in parts[i + 1:]:
            edges.extend((a, b) for a in part for b in other)
    graph = Graph(11, edges)
    inst = Instance(graph, s=[9, 10])
    return graph, inst, parts


def absorb_chain_graph() -> Graph:
    """9 vertices engineered so the high-degree rule absorbs v1..v5 at k=3.

    v1 (id 0) is adjacent to everything; v2..v5 (ids 1..4) form a 4-cycle
    fully joined to v6..v9 (ids 5..8); the only edge inside {v6..v9} is
    (v6, v7).  After absorption, v7 is fully adjacent to {v1..v6} while v8
    and v9 both miss v6.
    """
    edges = [(0, w) for w in range(1, 9)]
    edges += [(1, 2), (2, 3), (3, 4), (1, 4)]          # 4-cycle v2-v3-v4-v5
    edges += [(a, b) for a in range(1, 5) for b in range(5, 9)]
    edges += [(5, 6)]                                   # v6-v7
    return Graph(9, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def rand_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph(n, edges)


def rand_valid_s(rng: random.Random, graph: Graph, k: int, max_size: int = 4) -> list[int]:
    """Random vertex subset with at most k internal non-edges (may be empty)."""
    from kdefective import count_non_edges

    for _ in range(60):
        size = rng.randint(0, min(max_size, graph.n))
        s = rng.sample(range(graph.n), size)
        if count_non_edges(graph, s) <= k:
            return sorted(s)
    return []

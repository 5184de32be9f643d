"""Immutable simple undirected graphs and the peeling primitives built on them.

Vertices are dense integers ``0..n-1``.  Parsing remaps arbitrary input tokens
to dense ids and keeps the original tokens as labels, so results can be
reported in the caller's vocabulary.  Graphs are never mutated after
construction; search-time deletions live in :class:`kdefective.instance.Instance`.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

# Above this vertex count, pair queries use per-vertex hash sets instead of a
# dense byte matrix (the matrix costs n*n bytes).
DENSE_MATRIX_MAX_N = 4096


class EdgeListFormatError(ValueError):
    """A data line of an edge list did not hold exactly two vertex tokens."""

    def __init__(self, line_number: int, line: str):
        super().__init__(f"line {line_number}: expected two vertex tokens, got {line!r}")
        self.line_number = line_number


@dataclass(frozen=True)
class ParseReport:
    """What ``load_edge_list`` dropped while building the graph."""

    duplicate_edges: int = 0
    self_loops: int = 0


@dataclass(frozen=True)
class DegeneracyInfo:
    """A degeneracy ordering of a graph.

    ``order[i]`` has minimum degree in the subgraph induced by
    ``order[i:]``; ``rank`` is the inverse permutation and ``delta`` the
    degeneracy (the largest minimum degree seen while peeling).
    """

    order: list[int]
    rank: list[int]
    delta: int


class Graph:
    """Simple undirected graph with sorted adjacency and fast pair queries.

    Invariants: no self-loops or parallel edges, symmetric adjacency, each
    neighbor list strictly ascending, and ``m`` equal to half the sum of the
    neighbor list lengths.
    """

    __slots__ = ("n", "m", "adj", "labels", "_sets", "_matrix")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], labels: Sequence | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                continue
            normalized.add((u, v) if u < v else (v, u))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in normalized:
            adj[u].append(v)
            adj[v].append(u)
        for lst in adj:
            lst.sort()
        self.n = n
        self.m = len(normalized)
        self.adj = adj
        if labels is None:
            labels = list(range(n))
        elif len(labels) != n:
            raise ValueError("labels must have one entry per vertex")
        self.labels = list(labels)
        self._sets = [frozenset(lst) for lst in adj]
        if 0 < n <= DENSE_MATRIX_MAX_N:
            matrix = bytearray(n * n)
            for u, v in normalized:
                matrix[u * n + v] = 1
                matrix[v * n + u] = 1
            self._matrix = matrix
        else:
            self._matrix = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence | None = None) -> "Graph":
        return cls(n, edges, labels)

    def has_edge(self, u: int, v: int) -> bool:
        """True iff (u, v) is an edge; a vertex is never adjacent to itself."""
        if self._matrix is not None:
            return bool(self._matrix[u * self.n + v])
        return v in self._sets[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def neighbors(self, u: int) -> Sequence[int]:
        return self.adj[u]

    def neighbor_set(self, u: int) -> frozenset[int]:
        return self._sets[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


def load_edge_list(lines: Iterable[str]) -> tuple[Graph, ParseReport]:
    """Parse a whitespace edge list into a graph plus a parse report.

    Lines starting with ``#`` or ``%`` are comments and blank lines are
    skipped.  Each data line holds exactly two vertex tokens (arbitrary
    strings); anything else raises :class:`EdgeListFormatError` with the line
    number.  Vertices are densely remapped in first-appearance order;
    duplicate edges and self-loops are dropped and counted in the report.
    """
    ids: dict[str, int] = {}
    labels: list[str] = []
    edges: set[tuple[int, int]] = set()
    duplicates = 0
    self_loops = 0

    def vertex_id(token: str) -> int:
        vid = ids.get(token)
        if vid is None:
            vid = len(labels)
            ids[token] = vid
            labels.append(token)
        return vid

    for line_number, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped[0] in "#%":
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise EdgeListFormatError(line_number, raw.rstrip("\n"))
        u = vertex_id(tokens[0])
        v = vertex_id(tokens[1])
        if u == v:
            self_loops += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in edges:
            duplicates += 1
        else:
            edges.add(key)

    graph = Graph(len(labels), edges, labels)
    return graph, ParseReport(duplicate_edges=duplicates, self_loops=self_loops)


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabeled to ``0..len-1`` in sorted order."""
    sub, _ = induced_subgraph_with_ids(graph, vertices)
    return sub


def induced_subgraph_with_ids(graph: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Like :func:`induced_subgraph` but also returns new-id -> old-id."""
    kept = sorted(set(vertices))
    if kept and not (0 <= kept[0] and kept[-1] < graph.n):
        raise ValueError("vertex out of range")
    index = {v: i for i, v in enumerate(kept)}
    edges = []
    for u in kept:
        iu = index[u]
        for w in graph.adj[u]:
            if w > u and w in index:
                edges.append((iu, index[w]))
    labels = [graph.labels[v] for v in kept]
    return Graph(len(kept), edges, labels), kept


def degeneracy_ordering(graph: Graph) -> DegeneracyInfo:
    """Peel minimum-degree vertices, smallest id first among ties.

    Uses a lazily invalidated heap, so stale entries are skipped when popped.
    """
    n = graph.n
    deg = [graph.degree(v) for v in range(n)]
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    removed = bytearray(n)
    order: list[int] = []
    delta = 0
    adj = graph.adj
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = 1
        order.append(v)
        if d > delta:
            delta = d
        for w in adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    rank = [0] * n
    for i, v in enumerate(order):
        rank[v] = i
    return DegeneracyInfo(order=order, rank=rank, delta=delta)


def k_core(graph: Graph, c: int) -> list[int]:
    """Vertices of the maximal subgraph in which every vertex has degree >= c."""
    n = graph.n
    if c <= 0:
        return list(range(n))
    deg = [graph.degree(v) for v in range(n)]
    alive = bytearray([1]) * n
    queue = [v for v in range(n) if deg[v] < c]
    adj = graph.adj
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        if not alive[v]:
            continue
        alive[v] = 0
        for w in adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == c - 1:
                    queue.append(w)
    return [v for v in range(n) if alive[v]]


def k_truss(graph: Graph, t: int) -> list[tuple[int, int]]:
    """Edges of the maximal edge set where every edge has >= t-2 common
    neighbors within the edge-induced subgraph."""
    if t < 2:
        raise ValueError("truss order must be at least 2")
    threshold = t - 2
    if threshold <= 0:
        return graph.edges()
    sets = [set(s) for s in graph._sets]
    support: dict[tuple[int, int], int] = {}
    queue: list[tuple[int, int]] = []
    for u in range(graph.n):
        for v in graph.adj[u]:
            if v <= u:
                continue
            a, b = (u, v) if len(sets[u]) <= len(sets[v]) else (v, u)
            s = sum(1 for w in sets[a] if w in sets[b])
            support[(u, v)] = s
            if s < threshold:
                queue.append((u, v))
    head = 0
    while head < len(queue):
        u, v = queue[head]
        head += 1
        if (u, v) not in support:
            continue
        del support[(u, v)]
        sets[u].discard(v)
        sets[v].discard(u)
        a, b = (u, v) if len(sets[u]) <= len(sets[v]) else (v, u)
        for w in sets[a]:
            if w not in sets[b]:
                continue
            for edge in ((u, w) if u < w else (w, u), (v, w) if v < w else (w, v)):
                s = support.get(edge)
                if s is not None:
                    support[edge] = s - 1
                    if s == threshold:
                        queue.append(edge)
    return sorted(support)


def count_non_edges(graph: Graph, vertices: Iterable[int]) -> int:
    """Number of missing edges inside the set: |S|(|S|-1)/2 - |E(G[S])|."""
    members = set(vertices)
    if members and not all(0 <= v < graph.n for v in members):
        raise ValueError("vertex out of range")
    edges_inside = 0
    for u in members:
        for w in graph.adj[u]:
            if w > u and w in members:
                edges_inside += 1
    size = len(members)
    return size * (size - 1) // 2 - edges_inside

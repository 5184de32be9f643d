"""Mutable branch-and-bound state over an immutable graph.

An :class:`Instance` is the live subproblem (g, S): a partial solution S, the
surviving candidate vertices, and incrementally maintained counters.  All
mutation goes through :meth:`add_to_s` and :meth:`remove_vertex`, each of
which records an entry on the undo trail so backtracking is a cheap
:meth:`undo_to`.  One instance is confined to one worker at a time.
"""

from __future__ import annotations

from typing import Iterable

from .graph import Graph

CANDIDATE = 0
IN_S = 1
REMOVED = 2


class Instance:
    __slots__ = (
        "graph",
        "status",
        "cand",
        "s_stack",
        "nonedges_in_s",
        "deg_to_s",
        "live_degree",
        "live_edges",
        "trail",
    )

    def __init__(self, graph: Graph, s: Iterable[int] = ()):
        n = graph.n
        self.graph = graph
        self.status = bytearray(n)
        self.cand = set(range(n))
        self.s_stack: list[int] = []
        self.nonedges_in_s = 0
        # nn_in_s(v) is derived as |S| - deg_to_s[v]; storing the adjacency
        # count keeps both add and undo O(degree).
        self.deg_to_s = [0] * n
        self.live_degree = [graph.degree(v) for v in range(n)]
        self.live_edges = graph.m
        self.trail: list[int] = []
        for v in s:
            self.add_to_s(v)

    # -- queries ---------------------------------------------------------

    def n_live(self) -> int:
        return len(self.cand) + len(self.s_stack)

    def num_candidates(self) -> int:
        return len(self.cand)

    def nn_in_s(self, v: int) -> int:
        """Number of S members not adjacent to v (v itself not counted)."""
        return len(self.s_stack) - self.deg_to_s[v]

    def live_nonedges(self) -> int:
        nl = self.n_live()
        return nl * (nl - 1) // 2 - self.live_edges

    def is_leaf(self, k: int) -> bool:
        """True when the whole live graph already misses at most k edges."""
        return self.live_nonedges() <= k

    def live_vertices(self) -> list[int]:
        return sorted(self.cand | set(self.s_stack))

    def candidates_sorted(self) -> list[int]:
        return sorted(self.cand)

    # -- mutation --------------------------------------------------------

    def mark(self) -> int:
        return len(self.trail)

    def add_to_s(self, v: int) -> None:
        status = self.status
        if status[v] != CANDIDATE:
            raise ValueError(f"vertex {v} is not a candidate")
        self.nonedges_in_s += len(self.s_stack) - self.deg_to_s[v]
        status[v] = IN_S
        self.cand.remove(v)
        self.s_stack.append(v)
        deg_to_s = self.deg_to_s
        for w in self.graph.adj[v]:
            if status[w] != REMOVED:
                deg_to_s[w] += 1
        self.trail.append(v << 1)

    def remove_vertex(self, v: int) -> None:
        status = self.status
        if status[v] != CANDIDATE:
            raise ValueError(f"vertex {v} is not a candidate")
        status[v] = REMOVED
        self.cand.remove(v)
        self.live_edges -= self.live_degree[v]
        live_degree = self.live_degree
        for w in self.graph.adj[v]:
            if status[w] != REMOVED:
                live_degree[w] -= 1
        self.trail.append(v << 1 | 1)

    def undo_to(self, mark: int) -> None:
        """Rewind the trail to a previous :meth:`mark` (LIFO discipline)."""
        trail = self.trail
        status = self.status
        adj = self.graph.adj
        live_degree = self.live_degree
        deg_to_s = self.deg_to_s
        while len(trail) > mark:
            code = trail.pop()
            v = code >> 1
            if code & 1:
                # undo a removal: v's own frozen live_degree is still valid
                # because updates skip removed vertices in both directions.
                status[v] = CANDIDATE
                self.cand.add(v)
                for w in adj[v]:
                    if status[w] != REMOVED:
                        live_degree[w] += 1
                self.live_edges += live_degree[v]
            else:
                popped = self.s_stack.pop()
                assert popped == v
                status[v] = CANDIDATE
                self.cand.add(v)
                for w in adj[v]:
                    if status[w] != REMOVED:
                        deg_to_s[w] -= 1
                self.nonedges_in_s -= len(self.s_stack) - deg_to_s[v]

    # -- diagnostics ------------------------------------------------------

    def snapshot(self) -> tuple:
        """Hashable view of the full state, for undo round-trip tests."""
        return (
            bytes(self.status),
            tuple(self.s_stack),
            self.nonedges_in_s,
            tuple(self.deg_to_s),
            tuple(self.live_degree),
            self.live_edges,
        )

    def validate(self, k: int | None = None) -> None:
        """Recount every counter from scratch and compare; raises on drift."""
        graph = self.graph
        status = self.status
        n = graph.n
        live = [v for v in range(n) if status[v] != REMOVED]
        assert set(self.s_stack) == {v for v in range(n) if status[v] == IN_S}
        assert self.cand == {v for v in range(n) if status[v] == CANDIDATE}
        assert len(self.cand) + len(self.s_stack) + sum(1 for v in range(n) if status[v] == REMOVED) == n
        live_set = set(live)
        edges = 0
        for v in live:
            deg = sum(1 for w in graph.adj[v] if w in live_set)
            assert deg == self.live_degree[v], f"live_degree[{v}]"
            edges += deg
        assert edges // 2 == self.live_edges, "live_edges"
        s_set = set(self.s_stack)
        for v in live:
            expected = sum(1 for w in graph.adj[v] if w in s_set)
            assert expected == self.deg_to_s[v], f"deg_to_s[{v}]"
        pairs = len(s_set) * (len(s_set) - 1) // 2
        inside = sum(1 for u in s_set for w in graph.adj[u] if w > u and w in s_set)
        assert pairs - inside == self.nonedges_in_s, "nonedges_in_s"
        if k is not None:
            assert self.nonedges_in_s <= k, "partial solution exceeds the non-edge budget"

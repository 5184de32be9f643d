"""Graph construction, parsing, and the peeling primitives."""

import io
import math
import random

import pytest
from hypothesis import given, strategies as st

from kdefective import (
    EdgeListFormatError,
    Graph,
    count_non_edges,
    degeneracy_ordering,
    induced_subgraph,
    induced_subgraph_with_ids,
    k_core,
    k_truss,
    load_edge_list,
)

from helpers import complete_graph, fig2_graph, fig2_text, fig6_graph, rand_graph, v


class TestLoadEdgeList:
    def test_triangle(self):
        graph, report = load_edge_list(io.StringIO("1 2\n2 3\n3 1\n"))
        assert (graph.n, graph.m) == (3, 3)
        assert report == type(report)()

    def test_duplicates_and_self_loops(self):
        graph, report = load_edge_list(["1 2", "1 2", "2 1", "3 3"])
        assert (graph.n, graph.m) == (3, 1)
        assert report.duplicate_edges == 2
        assert report.self_loops == 1

    def test_fig2_fixture(self):
        graph, _ = load_edge_list(io.StringIO(fig2_text()))
        assert (graph.n, graph.m) == (12, 26)
        assert graph.labels[0] == "v1"

    def test_comments_and_blanks(self):
        graph, _ = load_edge_list(["# header", "% other", "", "a b"])
        assert (graph.n, graph.m) == (2, 1)
        assert graph.labels == ["a", "b"]

    def test_malformed_line(self):
        with pytest.raises(EdgeListFormatError) as info:
            load_edge_list(["1 2", "3 4 5"])
        assert info.value.line_number == 2

    def test_empty_input(self):
        graph, _ = load_edge_list([])
        assert (graph.n, graph.m) == (0, 0)

    def test_first_appearance_ordering(self):
        graph, _ = load_edge_list(["7 3", "3 99"])
        assert graph.labels == ["7", "3", "99"]


class TestGraphInvariants:
    def test_adjacency_sorted_and_symmetric(self):
        graph = fig2_graph()
        for u in range(graph.n):
            lst = graph.adj[u]
            assert list(lst) == sorted(set(lst))
            for w in lst:
                assert u in graph.adj[w]
        assert sum(len(graph.adj[u]) for u in range(graph.n)) == 2 * graph.m

    def test_has_edge(self):
        tri = Graph(3, [(0, 1), (1, 2), (2, 0)])
        assert tri.has_edge(0, 1)
        assert not tri.has_edge(0, 0)
        fig2 = fig2_graph()
        assert not fig2.has_edge(*v(2, 4))

    def test_has_edge_above_dense_threshold(self):
        n = 5000  # beyond the dense-matrix cutoff
        graph = Graph(n, [(0, 1), (0, n - 1)])
        assert graph._matrix is None
        assert graph.has_edge(0, n - 1)
        assert not graph.has_edge(1, 2)

    @given(st.integers(2, 12), st.randoms(use_true_random=False))
    def test_random_graph_invariants(self, n, rnd):
        graph = rand_graph(rnd, n, 0.5)
        assert graph.m == sum(len(a) for a in graph.adj) // 2
        for u in range(n):
            assert not graph.has_edge(u, u)
            for w in graph.adj[u]:
                assert graph.has_edge(u, w) and graph.has_edge(w, u)


class TestInducedSubgraph:
    def test_fig2_first_six(self):
        sub = induced_subgraph(fig2_graph(), v(1, 2, 3, 4, 5, 6))
        assert (sub.n, sub.m) == (6, 13)
        missing = [(a, b) for a in range(6) for b in range(a + 1, 6) if not sub.has_edge(a, b)]
        assert missing == [tuple(v(1, 5)), tuple(v(2, 4))]

    def test_empty_set(self):
        sub = induced_subgraph(fig2_graph(), [])
        assert (sub.n, sub.m) == (0, 0)

    def test_fig2_clique_component(self):
        sub = induced_subgraph(fig2_graph(), v(8, 9, 10, 11, 12))
        assert (sub.n, sub.m) == (5, 10)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            induced_subgraph(fig2_graph(), [0, 99])

    def test_label_composition(self):
        graph = fig2_graph()
        sub, ids = induced_subgraph_with_ids(graph, v(8, 12))
        assert sub.labels == ["v8", "v12"]
        assert ids == v(8, 12)


class TestDegeneracyOrdering:
    def test_fig2_order_and_delta(self):
        info = degeneracy_ordering(fig2_graph())
        assert info.order == v(7, 1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12)
        assert info.delta == 4

    def test_complete_graph(self):
        info = degeneracy_ordering(complete_graph(5))
        assert info.delta == 4
        assert sorted(info.order) == list(range(5))

    def test_fig6_is_valid_ordering(self):
        # The published ordering for this graph uses a different tie-break;
        # ours must still satisfy the definition, with the same degeneracy.
        graph = fig6_graph()
        info = degeneracy_ordering(graph)
        assert info.delta == 3
        _assert_valid_degeneracy_order(graph, info)

    @given(st.integers(1, 18), st.sampled_from([0.2, 0.5, 0.8]), st.randoms(use_true_random=False))
    def test_ordering_definition_holds(self, n, p, rnd):
        graph = rand_graph(rnd, n, p)
        info = degeneracy_ordering(graph)
        _assert_valid_degeneracy_order(graph, info)
        assert info.delta <= math.isqrt(2 * graph.m) or graph.m == 0
        assert sorted(info.order) == list(range(n))
        assert all(info.rank[info.order[i]] == i for i in range(n))


def _assert_valid_degeneracy_order(graph, info):
    remaining = set(range(graph.n))
    seen_delta = 0
    for vert in info.order:
        degrees = {u: sum(1 for w in graph.adj[u] if w in remaining) for u in remaining}
        mindeg = min(degrees.values())
        assert degrees[vert] == mindeg
        seen_delta = max(seen_delta, mindeg)
        remaining.remove(vert)
    assert seen_delta == info.delta


class TestKCore:
    def test_fig2_cores(self):
        graph = fig2_graph()
        assert k_core(graph, 4) == v(1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12)
        assert k_core(graph, 5) == []
        assert k_core(graph, 0) == list(range(12))

    def test_nesting(self):
        graph = fig2_graph()
        for c in range(5):
            assert set(k_core(graph, c + 1)) <= set(k_core(graph, c))

    def test_peeling_idempotent(self):
        graph = fig2_graph()
        core = k_core(graph, 4)
        sub, ids = induced_subgraph_with_ids(graph, core)
        assert [ids[x] for x in k_core(sub, 4)] == core

    def test_order_independence_of_fixpoint(self):
        # Peeling must agree with deleting any below-threshold vertex in
        # arbitrary order until none remains.
        rng = random.Random(7)
        for _ in range(100):
            n = rng.randint(1, 50)
            graph = rand_graph(rng, n, rng.choice([0.1, 0.3, 0.6]))
            c = rng.randint(1, 4)
            expected = set(k_core(graph, c))
            alive = set(range(n))
            while True:
                victims = [u for u in alive if sum(1 for w in graph.adj[u] if w in alive) < c]
                if not victims:
                    break
                alive.remove(rng.choice(victims))
            assert alive == expected


class TestKTruss:
    def test_fig2_4_truss(self):
        graph = fig2_graph()
        edges = k_truss(graph, 4)
        dropped = {tuple(sorted(e)) for e in [v(7, 1), v(7, 6), v(7, 5)]}
        assert set(edges) == {tuple(e) for e in _all_edges(graph)} - dropped

    def test_fig2_5_truss(self):
        graph = fig2_graph()
        clique = set(v(8, 9, 10, 11, 12))
        expect = {(a, b) for a in clique for b in clique if a < b}
        assert set(k_truss(graph, 5)) == expect

    def test_triangle(self):
        tri = Graph(3, [(0, 1), (1, 2), (0, 2)])
        assert k_truss(tri, 3) == [(0, 1), (0, 2), (1, 2)]

    def test_truss_inside_core(self):
        rng = random.Random(11)
        for _ in range(30):
            graph = rand_graph(rng, rng.randint(2, 25), 0.4)
            t = rng.randint(3, 5)
            touched = {x for e in k_truss(graph, t) for x in e}
            assert touched <= set(k_core(graph, t - 1))


def _all_edges(graph):
    return [(u, w) for u in range(graph.n) for w in graph.adj[u] if u < w]


class TestCountNonEdges:
    def test_fig2_first_six(self):
        assert count_non_edges(fig2_graph(), v(1, 2, 3, 4, 5, 6)) == 2

    def test_complete_subsets(self):
        k5 = complete_graph(5)
        rng = random.Random(3)
        for _ in range(10):
            subset = rng.sample(range(5), rng.randint(0, 5))
            assert count_non_edges(k5, subset) == 0

    def test_fig6_triple(self):
        assert count_non_edges(fig6_graph(), v(4, 6, 7)) == 1

    @given(st.integers(0, 10), st.randoms(use_true_random=False))
    def test_matches_definition(self, n, rnd):
        graph = rand_graph(rnd, n, 0.5)
        subset = [u for u in range(n) if rnd.random() < 0.5]
        explicit = sum(
            1
            for i, a in enumerate(subset)
            for b in subset[i + 1:]
            if not graph.has_edge(a, b)
        )
        assert count_non_edges(graph, subset) == explicit

from __future__ import annotations

import pytest
from hypothesis import given

import convexcycles as cc

from .strategies import graphs


class TestConstruction:
    def test_triangle(self):
        g = cc.from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
        assert g.n == 3
        assert g.m == 3
        assert g.adjacency == ((1, 2), (0, 2), (0, 1))

    def test_edge_order_irrelevant(self):
        a = cc.from_edge_list(4, [(0, 1), (2, 3), (1, 2)])
        b = cc.from_edge_list(4, [(2, 1), (1, 0), (3, 2)])
        assert a == b

    def test_loop_rejected(self):
        with pytest.raises(cc.InvalidEdge):
            cc.from_edge_list(2, [(0, 0)])

    def test_duplicate_rejected(self):
        with pytest.raises(cc.DuplicateEdge):
            cc.from_edge_list(4, [(0, 1), (0, 1)])

    def test_reversed_duplicate_rejected(self):
        with pytest.raises(cc.DuplicateEdge):
            cc.from_edge_list(4, [(0, 1), (1, 0)])

    def test_endpoint_out_of_range(self):
        with pytest.raises(cc.OutOfRange):
            cc.from_edge_list(3, [(0, 3)])
        with pytest.raises(cc.OutOfRange):
            cc.from_edge_list(3, [(-1, 0)])

    def test_edge_normalized(self):
        e = cc.Edge(5, 2)
        assert (e.u, e.v) == (2, 5)
        with pytest.raises(cc.InvalidEdge):
            cc.Edge(3, 3)

    @given(graphs())
    def test_invariants(self, g: cc.Graph):
        assert 2 * g.m == sum(len(nbrs) for nbrs in g.adjacency)
        for u in range(g.n):
            assert list(g.adjacency[u]) == sorted(set(g.adjacency[u]))
            assert u not in g.adjacency[u]
            for w in g.adjacency[u]:
                assert u in g.adjacency[w]


class TestGenerators:
    def test_petersen(self, petersen):
        assert petersen.n == 10
        assert petersen.m == 15
        assert petersen.regular_degree() == 3

    def test_hoffman_singleton(self, hoffman_singleton, hoffman_singleton_profile):
        assert hoffman_singleton.n == 50
        assert hoffman_singleton.m == 175
        assert hoffman_singleton.regular_degree() == 7
        assert hoffman_singleton_profile.girth == 5
        assert hoffman_singleton_profile.diameter == 2

    def test_cycle(self):
        g = cc.cycle_graph(6)
        assert g.n == 6 and g.m == 6
        assert g.regular_degree() == 2

    def test_cycle_too_small(self):
        with pytest.raises(cc.InvalidParameter):
            cc.cycle_graph(2)

    def test_complete(self):
        assert cc.complete_graph(1).m == 0
        assert cc.complete_graph(5).m == 10

    def test_complete_bipartite(self):
        g = cc.complete_bipartite_graph(2, 3)
        assert g.n == 5 and g.m == 6
        assert g.degrees() == (3, 3, 2, 2, 2)
        with pytest.raises(cc.InvalidParameter):
            cc.complete_bipartite_graph(0, 3)

    def test_gnp_deterministic(self):
        a = cc.gnp_random_graph(16, 0.4, 1234)
        b = cc.gnp_random_graph(16, 0.4, 1234)
        assert a == b

    def test_gnp_seed_changes_graph(self):
        a = cc.gnp_random_graph(16, 0.5, 1)
        b = cc.gnp_random_graph(16, 0.5, 2)
        assert a != b

    def test_gnp_extremes(self):
        assert cc.gnp_random_graph(8, 0.0, 9).m == 0
        assert cc.gnp_random_graph(8, 1.0, 9).m == 28

    def test_gnp_validation(self):
        with pytest.raises(cc.InvalidParameter):
            cc.gnp_random_graph(5, 1.5, 0)
        with pytest.raises(cc.InvalidParameter):
            cc.gnp_random_graph(5, 0.5, -1)
        with pytest.raises(cc.InvalidParameter):
            cc.gnp_random_graph(5, 0.5, 2**64)

    def test_generate_dispatch(self):
        assert cc.generate("cycle", 5) == cc.cycle_graph(5)
        assert cc.generate("petersen") == cc.petersen_graph()
        assert cc.generate("gnp", "12", "0.3", "7") == cc.gnp_random_graph(12, 0.3, 7)
        with pytest.raises(cc.InvalidParameter):
            cc.generate("mystery")
        with pytest.raises(cc.InvalidParameter):
            cc.generate("cycle")
        with pytest.raises(cc.InvalidParameter):
            cc.generate("cycle", "six")


class TestDeleteVertex:
    def test_triangle_to_edge(self):
        g = cc.delete_vertex(cc.complete_graph(3), 2)
        assert g == cc.from_edge_list(2, [(0, 1)])

    def test_cycle_to_path(self):
        g = cc.delete_vertex(cc.cycle_graph(6), 0)
        assert g == cc.from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4)])

    def test_pendant_removal_restores(self, petersen):
        with_pendant = cc.from_edge_list(
            11, list(petersen.edge_list) + [(0, 10)]
        )
        assert cc.delete_vertex(with_pendant, 10) == petersen

    def test_out_of_range(self):
        with pytest.raises(cc.OutOfRange):
            cc.delete_vertex(cc.complete_graph(3), 3)

    @given(graphs(min_n=1))
    def test_labels_stay_contiguous(self, g: cc.Graph):
        h = cc.delete_vertex(g, g.n - 1)
        assert h.n == g.n - 1
        h0 = cc.delete_vertex(g, 0)
        assert h0.n == g.n - 1
        assert h0.m == g.m - g.degree(0)

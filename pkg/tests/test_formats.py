from __future__ import annotations

import pytest
from hypothesis import given

import convexcycles as cc

from .strategies import graphs


class TestParseGraph6:
    def test_k2(self):
        g = cc.parse_graph6("A_")
        assert g == cc.from_edge_list(2, [(0, 1)])

    def test_k4(self):
        g = cc.parse_graph6("C~")
        assert g.n == 4 and g.m == 6

    def test_petersen_string(self):
        # validated by invariants rather than by trusting the string
        g = cc.parse_graph6("IsP@OkWHG")
        profile = cc.metric_profile(g)
        assert g.n == 10
        assert g.m == 15
        assert g.regular_degree() == 3
        assert profile.girth == 5

    def test_header_prefix(self):
        assert cc.parse_graph6(">>graph6<<A_") == cc.parse_graph6("A_")

    def test_empty_graph(self):
        g = cc.parse_graph6("?")
        assert g.n == 0 and g.m == 0

    @pytest.mark.parametrize(
        "bad",
        [
            "",
            "A",          # payload missing
            "A__",        # payload too long
            "C~~",        # payload too long
            "A *",        # character below the alphabet
            "~??",        # truncated long header
            "~~????",     # truncated 8-byte header
        ],
    )
    def test_parse_errors(self, bad):
        with pytest.raises(cc.ParseError):
            cc.parse_graph6(bad)


class TestWriteGraph6:
    def test_k2_k4(self):
        assert cc.write_graph6(cc.complete_graph(2)) == "A_"
        assert cc.write_graph6(cc.complete_graph(4)) == "C~"

    def test_roundtrip_random_sizes(self):
        # labeled identity for orders up to 200, including the long form
        for i, n in enumerate([0, 1, 2, 3, 10, 30, 62, 63, 64, 100, 200]):
            g = cc.gnp_random_graph(n, 0.31, 1000 + i)
            assert cc.parse_graph6(cc.write_graph6(g)) == g

    def test_long_form_header(self):
        g = cc.gnp_random_graph(63, 0.2, 5)
        text = cc.write_graph6(g)
        assert text.startswith("~")
        assert cc.parse_graph6(text) == g

    @given(graphs())
    def test_roundtrip(self, g: cc.Graph):
        assert cc.parse_graph6(cc.write_graph6(g)) == g


class TestEdgeList:
    def test_parse_with_comments(self):
        text = "# a triangle plus a chord target\n0 1\n1 2\n2 0  # closing edge\n\n2 3\n"
        g = cc.parse_edge_list(text)
        assert g.n == 4 and g.m == 4

    def test_vertex_count_is_max_plus_one(self):
        assert cc.parse_edge_list("0 5\n").n == 6

    def test_roundtrip(self):
        g = cc.gnp_random_graph(9, 0.5, 77)
        assert cc.parse_edge_list(cc.write_edge_list(g)) == g

    @pytest.mark.parametrize("bad", ["0\n", "0 1 2\n", "a b\n", "-1 2\n"])
    def test_parse_errors(self, bad):
        with pytest.raises(cc.ParseError):
            cc.parse_edge_list(bad)

    def test_duplicate_edge_propagates(self):
        with pytest.raises(cc.DuplicateEdge):
            cc.parse_edge_list("0 1\n1 0\n")


class TestAutoDetect:
    def test_graph6_line(self):
        assert cc.load_graph_text("C~\n").m == 6

    def test_edge_list_text(self):
        g = cc.load_graph_text("# comment first\n0 1\n1 2\n")
        assert g.n == 3 and g.m == 2

    def test_header_line(self):
        assert cc.load_graph_text(">>graph6<<A_\n").m == 1

import networkx as nx
import pytest
from graph_helpers import graphs, to_networkx
from hypothesis import given

from d2ctools.graphs.core import Graph, TwoColoring
from d2ctools.graphs.families import complete_graph, cycle_graph, path_graph
from d2ctools.graphs.formats import (
    GraphParseError,
    UnsupportedGraphSize,
    parse_coloring,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)


class TestGraph6:
    def test_known_strings(self, k1, k2, p3):
        assert write_graph6(k1) == "@"
        assert write_graph6(k2) == "A_"
        assert write_graph6(p3) == "Bg"
        assert write_graph6(complete_graph(3)) == "Bw"
        assert write_graph6(Graph(n=3)) == "B?"

    def test_parse_known_strings(self, p3):
        assert parse_graph6("Bg") == p3
        assert parse_graph6("Bg\n") == p3
        assert parse_graph6(">>graph6<<Bg") == p3
        assert parse_graph6("Bw") == complete_graph(3)

    @given(graphs(max_n=12))
    def test_matches_networkx_writer(self, g):
        expected = nx.to_graph6_bytes(to_networkx(g), header=False).strip().decode()
        assert write_graph6(g) == expected
        assert parse_graph6(expected) == g

    def test_four_byte_size_form(self):
        g = cycle_graph(100)
        text = write_graph6(g)
        assert text.startswith("~?@c")
        assert text == nx.to_graph6_bytes(to_networkx(g), header=False).strip().decode()
        assert parse_graph6(text) == g

    def test_size_beyond_four_byte_form(self):
        with pytest.raises(UnsupportedGraphSize):
            write_graph6(Graph(n=258048))
        with pytest.raises(UnsupportedGraphSize):
            parse_graph6("~~??????")

    @pytest.mark.parametrize(
        "text, fragment, offset",
        [
            ("", "empty", 0),
            ("B", "needs 1 data bytes", 1),
            ("Bgg", "needs 1 data bytes", 2),
            ("B!", "outside", 1),
            ("Bh", "padding", 1),
            ("?", "n = 0", 0),
            ("~?", "truncated", 2),
        ],
    )
    def test_malformed(self, text, fragment, offset):
        with pytest.raises(GraphParseError, match=fragment) as excinfo:
            parse_graph6(text)
        assert excinfo.value.offset == offset


class TestEdgeList:
    def test_parse(self, p3):
        assert parse_edge_list("3 2\n0 1\n1 2\n") == p3
        assert parse_edge_list("# a path\n\n3 2\n2 1\n# middle\n1 0\n") == p3

    def test_write(self, p3):
        assert write_edge_list(p3) == "3 2\n0 1\n1 2\n"
        assert parse_edge_list(write_edge_list(path_graph(6))) == path_graph(6)

    @pytest.mark.parametrize(
        "text, fragment, line",
        [
            ("2 1\n1 1\n", "self-loop at vertex 1", 2),
            ("2 1\n0 2\n", "out of range", 2),
            ("3 2\n0 1\n1 0\n", "duplicate", 3),
            ("3 1\n0 1\n1 2\n", "more than the declared 1", 3),
            ("3 2\n0 1\n", "declared 2 edges but found 1", 2),
            ("# nothing\n", "missing", 1),
            ("0 0\n", "positive", 1),
            ("3 x\n", "integer", 1),
            ("3 1\n0 1 2\n", "'u v'", 2),
        ],
    )
    def test_malformed(self, text, fragment, line):
        with pytest.raises(GraphParseError, match=fragment) as excinfo:
            parse_edge_list(text)
        assert excinfo.value.line == line


class TestColoring:
    def test_parse(self):
        assert parse_coloring("1\n2\n\n1\n") == TwoColoring(colors=(1, 2, 1))

    def test_rejects_other_values(self):
        with pytest.raises(GraphParseError, match="line 2"):
            parse_coloring("1\n3\n")

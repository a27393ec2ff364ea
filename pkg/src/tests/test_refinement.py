import pytest
from graph_helpers import graphs, graphs_with_relabeling
from hypothesis import given
from pydantic import ValidationError

from d2ctools.graphs.core import Graph, TwoColoring
from d2ctools.graphs.families import complete_bipartite_graph, path_graph
from d2ctools.iso.refinement import OrderedPartition, color_refine, is_equitable


class TestOrderedPartition:
    def test_validation(self):
        with pytest.raises(ValidationError):
            OrderedPartition(cells=((0, 1), (1, 2)))
        with pytest.raises(ValidationError):
            OrderedPartition(cells=((0,), ()))

    def test_from_coloring_puts_color_one_first(self):
        assert OrderedPartition.from_coloring(TwoColoring(colors=(2, 1, 2))).cells == ((1,), (0, 2))
        assert OrderedPartition.from_coloring(TwoColoring(colors=(2, 2))).cells == ((0, 1),)

    def test_refines(self):
        coarse = OrderedPartition(cells=((0, 1, 2), (3,)))
        assert OrderedPartition(cells=((0,), (2, 1), (3,))).refines(coarse)
        assert not OrderedPartition(cells=((0, 3), (1, 2))).refines(coarse)


class TestColorRefine:
    def test_vertex_transitive_graph_stays_one_cell(self, c6):
        assert color_refine(c6).cells == ((0, 1, 2, 3, 4, 5),)

    def test_path_splits_by_degree(self, p3):
        assert color_refine(p3).cells == ((0, 2), (1,))

    def test_isolated_vertex_before_edge(self):
        assert color_refine(Graph(n=3, edges=frozenset({(1, 2)}))).cells == ((0,), (1, 2))

    def test_longer_path_is_split_by_distance_to_ends(self):
        assert color_refine(path_graph(5)).cells == ((0, 4), (2,), (1, 3))

    def test_initial_partition_is_respected(self):
        g = complete_bipartite_graph(2, 2)
        initial = OrderedPartition(cells=((0,), (1, 2, 3)))
        result = color_refine(g, initial)
        assert result.cells == ((0,), (1,), (2, 3))
        assert result.refines(initial)

    def test_rejects_partition_of_other_vertex_set(self, p3):
        with pytest.raises(ValueError):
            color_refine(p3, OrderedPartition(cells=((0, 1),)))

    @given(graphs(max_n=10))
    def test_output_is_equitable(self, g):
        result = color_refine(g)
        assert is_equitable(g, result)
        assert result.covers(g.n)

    @given(graphs_with_relabeling(max_n=10))
    def test_commutes_with_relabeling(self, case):
        g, relabeled, p = case
        expected = [frozenset(p[v] for v in cell) for cell in color_refine(g).cells]
        assert color_refine(relabeled).as_sets() == expected


def test_is_equitable(p3):
    assert not is_equitable(p3, OrderedPartition.unit(3))
    assert is_equitable(p3, OrderedPartition(cells=((0, 2), (1,))))

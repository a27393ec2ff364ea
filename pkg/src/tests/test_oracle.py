import pytest
from graph_helpers import atlas_graphs

from d2ctools.graphs.core import Graph, TwoColoring, connected_components
from d2ctools.graphs.families import complete_graph, copies, cycle_graph, empty_graph, path_graph
from d2ctools.iso.canonical import has_nta
from d2ctools.oracle import OracleRefusal, brute_chi_d_le_2, brute_is_asymmetric, enumerate_proper_2_colorings


class TestEnumerateProper2Colorings:
    def test_path(self, p3):
        assert enumerate_proper_2_colorings(p3) == [
            TwoColoring(colors=(1, 2, 1)),
            TwoColoring(colors=(2, 1, 2)),
        ]

    def test_one_swap_bit_per_component(self):
        colorings = enumerate_proper_2_colorings(copies(complete_graph(2), 2))
        assert [c.colors for c in colorings] == [(1, 2, 1, 2), (2, 1, 1, 2), (1, 2, 2, 1), (2, 1, 2, 1)]

    def test_not_bipartite(self):
        assert enumerate_proper_2_colorings(complete_graph(3)) == []
        assert enumerate_proper_2_colorings(cycle_graph(5)) == []

    def test_count_is_two_to_the_components(self):
        for g in atlas_graphs(max_n=6):
            colorings = enumerate_proper_2_colorings(g)
            if colorings:
                assert len(colorings) == 2 ** len(connected_components(g))
                assert len(set(colorings)) == len(colorings)
                assert all(c.is_proper(g) for c in colorings)


class TestBruteChiDLe2:
    @pytest.mark.parametrize(
        "g, expected",
        [
            (complete_graph(1), True),
            (complete_graph(2), True),
            (path_graph(3), False),
            (empty_graph(2), True),
            (empty_graph(3), False),
            (copies(complete_graph(2), 2), False),
            (cycle_graph(5), False),
            (path_graph(4), True),
            (cycle_graph(6), False),
        ],
    )
    def test_named_graphs(self, g, expected):
        assert brute_chi_d_le_2(g) is expected

    def test_refusal(self):
        with pytest.raises(OracleRefusal):
            brute_chi_d_le_2(empty_graph(10))
        assert brute_chi_d_le_2(empty_graph(10), threshold=10) is False

    def test_environment_threshold(self, monkeypatch):
        monkeypatch.setenv("D2C_BRUTE_THRESHOLD", "2")
        with pytest.raises(OracleRefusal):
            brute_chi_d_le_2(path_graph(3))


class TestBruteIsAsymmetric:
    def test_examples(self, k1, k2, p3):
        assert brute_is_asymmetric(k1)
        assert not brute_is_asymmetric(k2)
        assert not brute_is_asymmetric(p3)

    def test_asymmetric_tree(self):
        g = Graph(n=7, edges=frozenset({(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)}))
        assert brute_is_asymmetric(g)

    def test_agrees_with_has_nta_up_to_seven_vertices(self):
        for g in atlas_graphs(max_n=7):
            assert brute_is_asymmetric(g) == (has_nta(g) is None)

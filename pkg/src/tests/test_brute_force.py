import pytest

from d2ctools.graphs.core import Graph, TwoColoring
from d2ctools.graphs.families import complete_graph, cycle_graph, empty_graph, path_graph
from d2ctools.iso.brute_force import (
    BruteForceRefusal,
    brute_force_color_preserving_nta,
    brute_force_isomorphic,
    brute_force_nta,
)


class TestBruteForceNta:
    def test_c4(self):
        nta = brute_force_nta(cycle_graph(4))
        assert nta.p == (0, 3, 2, 1)
        assert nta.is_automorphism_of(cycle_graph(4))

    def test_k1_and_k2(self, k1, k2):
        assert brute_force_nta(k1) is None
        assert brute_force_nta(k2).p == (1, 0)

    def test_smallest_asymmetric_tree(self):
        # spider with legs of length 1, 2, 3
        g = Graph(n=7, edges=frozenset({(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)}))
        assert brute_force_nta(g) is None


class TestBruteForceColorPreservingNta:
    def test_path_colorings(self, p3):
        assert brute_force_color_preserving_nta(p3, TwoColoring(colors=(1, 2, 1))).p == (2, 1, 0)
        assert brute_force_color_preserving_nta(p3, TwoColoring(colors=(1, 2, 2))) is None

    def test_two_isolated_vertices(self, two_k1):
        assert brute_force_color_preserving_nta(two_k1, TwoColoring(colors=(1, 2))) is None
        assert brute_force_color_preserving_nta(two_k1, TwoColoring(colors=(1, 1))).p == (1, 0)

    def test_length_mismatch(self, p3):
        with pytest.raises(ValueError):
            brute_force_color_preserving_nta(p3, TwoColoring(colors=(1, 2)))


class TestBruteForceIsomorphic:
    def test_examples(self, k2, two_k1, p3):
        assert brute_force_isomorphic(k2, two_k1) is None
        other = Graph(n=3, edges=frozenset({(0, 2), (1, 2)}))
        mapping = brute_force_isomorphic(p3, other)
        assert mapping.maps_onto(p3, other)

    def test_same_counts_not_isomorphic(self):
        two_triangles = Graph(n=6, edges=frozenset({(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)}))
        assert brute_force_isomorphic(cycle_graph(6), two_triangles) is None


class TestThreshold:
    def test_refuses_above_default(self):
        with pytest.raises(BruteForceRefusal) as excinfo:
            brute_force_nta(empty_graph(10))
        assert excinfo.value.threshold == 9

    def test_explicit_threshold(self):
        assert brute_force_nta(empty_graph(10), threshold=10).p == (0, 1, 2, 3, 4, 5, 6, 7, 9, 8)
        with pytest.raises(BruteForceRefusal):
            brute_force_isomorphic(complete_graph(3), complete_graph(3), threshold=2)

    def test_environment_threshold(self, monkeypatch):
        monkeypatch.setenv("D2C_BRUTE_THRESHOLD", "3")
        with pytest.raises(BruteForceRefusal):
            brute_force_nta(path_graph(4))
        assert brute_force_nta(path_graph(3)).p == (2, 1, 0)

import pytest
from hypothesis import settings

from d2ctools.graphs.core import Graph
from d2ctools.graphs.families import complete_graph, cycle_graph, empty_graph, path_graph, star_graph

settings.register_profile("d2c", deadline=None)
settings.load_profile("d2c")


@pytest.fixture()
def k1() -> Graph:
    return complete_graph(1)


@pytest.fixture()
def k2() -> Graph:
    return complete_graph(2)


@pytest.fixture()
def p3() -> Graph:
    return path_graph(3)


@pytest.fixture()
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture()
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture()
def c6() -> Graph:
    return cycle_graph(6)


@pytest.fixture()
def claw() -> Graph:
    return star_graph(3)


@pytest.fixture()
def two_k1() -> Graph:
    return empty_graph(2)


@pytest.fixture()
def three_k1() -> Graph:
    return empty_graph(3)

"""Graph enumeration and conversion helpers shared by the test modules."""

from itertools import combinations
from typing import Iterator

import networkx as nx
from hypothesis import strategies as st

from d2ctools.graphs.core import Graph, relabel


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every simple graph on vertices 0..n-1 (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(2 ** len(pairs)):
        yield Graph(n=n, edges=frozenset(pair for i, pair in enumerate(pairs) if mask >> i & 1))


def atlas_graphs(max_n: int = 7, min_n: int = 1) -> list[Graph]:
    """All graphs with min_n..max_n vertices up to isomorphism, from the networkx graph atlas."""
    return [from_networkx(h) for h in nx.graph_atlas_g() if min_n <= h.number_of_nodes() <= max_n]


def from_networkx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph(n=len(index), edges=frozenset((index[u], index[v]) for u, v in h.edges()))


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n=n, edges=frozenset(pair for pair, keep in zip(pairs, chosen) if keep))


@st.composite
def graphs_with_relabeling(draw, min_n: int = 1, max_n: int = 8) -> tuple[Graph, Graph, list[int]]:
    g = draw(graphs(min_n=min_n, max_n=max_n))
    p = draw(st.permutations(list(range(g.n))))
    return g, relabel(g, p), list(p)

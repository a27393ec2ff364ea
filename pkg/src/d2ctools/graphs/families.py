from d2ctools.graphs.core import Graph, disjoint_union


def empty_graph(n: int) -> Graph:
    return Graph(n=n)


def complete_graph(n: int) -> Graph:
    return Graph(n=n, edges=frozenset((u, v) for v in range(n) for u in range(v)))


def path_graph(n: int) -> Graph:
    return Graph(n=n, edges=frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n=n, edges=frozenset((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return Graph(n=leaves + 1, edges=frozenset((0, i) for i in range(1, leaves + 1)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(n=a + b, edges=frozenset((u, a + v) for u in range(a) for v in range(b)))


def copies(g: Graph, k: int) -> Graph:
    return disjoint_union([g] * k)

"""
Definition-level ground truth for "is there a proper distinguishing 2-coloring?".

Deliberately independent of `d2ctools.iso` and `d2ctools.d2c`: it has its own component search, its own
2-coloring, and its own automorphism scan (vertex-by-vertex assignment that only keeps partial maps agreeing with
the adjacency relation, so every completed map is an automorphism and every automorphism is completed).
"""

from collections import deque
from typing import Iterator, Optional, Sequence

from logzero import logger

from d2ctools.graphs.core import Graph, TwoColoring
from d2ctools.utils.common_init import get_brute_force_threshold


class OracleRefusal(RuntimeError):
    def __init__(self, n: int, threshold: int):
        self.n = n
        self.threshold = threshold
        super().__init__(f"oracle refused: n={n} exceeds the threshold of {threshold} vertices")


def _require_small(g: Graph, threshold: Optional[int]) -> None:
    limit = get_brute_force_threshold(threshold)
    if g.n > limit:
        raise OracleRefusal(g.n, limit)


def _neighbour_sets(g: Graph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _component_colorings(g: Graph) -> Optional[list[dict[int, int]]]:
    """Per component (ordered by smallest vertex) a proper coloring with the smallest vertex colored 1."""
    adj = _neighbour_sets(g)
    color: dict[int, int] = {}
    result = []
    for root in range(g.n):
        if root in color:
            continue
        part = {root: 1}
        color[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in color:
                    color[w] = part[w] = 3 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
        result.append(part)
    return result


def enumerate_proper_2_colorings(g: Graph) -> list[TwoColoring]:
    """All proper 2-colorings; bit i of the counter flips component i, counting from 0 up to 2^k - 1."""
    parts = _component_colorings(g)
    if parts is None:
        return []
    colorings = []
    for mask in range(2 ** len(parts)):
        colors = [0] * g.n
        for i, part in enumerate(parts):
            flip = (mask >> i) & 1
            for v, c in part.items():
                colors[v] = 3 - c if flip else c
        colorings.append(TwoColoring(colors=tuple(colors)))
    return colorings


def _automorphisms(adj: Sequence[set[int]], colors: Sequence[int]) -> Iterator[tuple[int, ...]]:
    n = len(adj)
    images = [-1] * n
    used = [False] * n

    def extend(v: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(images)
            return
        for w in range(n):
            if used[w] or colors[w] != colors[v] or len(adj[w]) != len(adj[v]):
                continue
            if all((u in adj[v]) == (images[u] in adj[w]) for u in range(v)):
                images[v] = w
                used[w] = True
                yield from extend(v + 1)
                used[w] = False
        images[v] = -1

    yield from extend(0)


def _has_nontrivial(adj: Sequence[set[int]], colors: Sequence[int]) -> bool:
    identity = tuple(range(len(adj)))
    return any(p != identity for p in _automorphisms(adj, colors))


def brute_chi_d_le_2(g: Graph, threshold: Optional[int] = None) -> bool:
    _require_small(g, threshold)
    adj = _neighbour_sets(g)
    for coloring in enumerate_proper_2_colorings(g):
        if not _has_nontrivial(adj, coloring.colors):
            logger.debug(f"oracle: n={g.n} distinguished by {list(coloring.colors)}")
            return True
    return False


def brute_is_asymmetric(g: Graph, threshold: Optional[int] = None) -> bool:
    _require_small(g, threshold)
    return not _has_nontrivial(_neighbour_sets(g), [1] * g.n)

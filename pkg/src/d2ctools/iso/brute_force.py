"""
Exhaustive permutation scans answering the same questions as `iso.canonical`, for cross-checking on small graphs.

Nothing here touches refinement or the canonical search; every candidate permutation is tested directly against
the edge sets. Inputs above the threshold are refused instead of scanned.
"""

from itertools import permutations
from typing import Optional

from d2ctools.graphs.core import Graph, TwoColoring
from d2ctools.iso.permutations import Permutation
from d2ctools.utils.common_init import get_brute_force_threshold


class BruteForceRefusal(RuntimeError):
    def __init__(self, n: int, threshold: int):
        self.n = n
        self.threshold = threshold
        super().__init__(f"brute force refused: n={n} exceeds the threshold of {threshold} vertices")


def _check_size(n: int, threshold: Optional[int]) -> None:
    limit = get_brute_force_threshold(threshold)
    if n > limit:
        raise BruteForceRefusal(n, limit)


def _maps_edges(source: Graph, target: Graph, images: tuple[int, ...]) -> bool:
    target_edges = target.edges
    for u, v in source.edges:
        a, b = images[u], images[v]
        if ((a, b) if a < b else (b, a)) not in target_edges:
            return False
    return True


def brute_force_isomorphic(g1: Graph, g2: Graph, threshold: Optional[int] = None) -> Optional[Permutation]:
    _check_size(max(g1.n, g2.n), threshold)
    if g1.n != g2.n or g1.m != g2.m:
        return None
    for images in permutations(range(g1.n)):
        if _maps_edges(g1, g2, images):
            return Permutation(p=images)
    return None


def brute_force_color_preserving_nta(
    g: Graph, c: Optional[TwoColoring] = None, threshold: Optional[int] = None
) -> Optional[Permutation]:
    """First nontrivial automorphism in lexicographic order that keeps every vertex's color, if any."""
    _check_size(g.n, threshold)
    if c is not None and len(c) != g.n:
        raise ValueError(f"coloring has length {len(c)} but the graph has {g.n} vertices")
    identity = tuple(range(g.n))
    for images in permutations(range(g.n)):
        if images == identity:
            continue
        if c is not None and any(c[images[v]] != c[v] for v in range(g.n)):
            continue
        if _maps_edges(g, g, images):
            return Permutation(p=images)
    return None


def brute_force_nta(g: Graph, threshold: Optional[int] = None) -> Optional[Permutation]:
    return brute_force_color_preserving_nta(g, None, threshold)

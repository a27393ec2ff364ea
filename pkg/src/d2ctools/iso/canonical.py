"""
Canonical labeling by individualization-refinement, and the GI / GA queries built on it.

The search tree's root is the refined initial partition (one cell, or the color 1 cell followed by the color 2
cell). A node's children individualize each vertex of its first smallest non-singleton cell, in ascending vertex
order, and refine again. Every discrete leaf defines a relabeling (vertex -> position); its certificate is the
sorted tuple of upper-triangle bit indices of the relabeled edges, and the canonical leaf is the one whose
relabeled graph has the lexicographically least graph6 string, which is the leaf with the greatest certificate.

Two leaves with equal certificates differ by an automorphism. Automorphisms found this way prune the tree in two
ways that cannot change the set of certificates seen: siblings in the same orbit of the automorphisms fixing the
node's path are skipped, and after a new automorphism the search returns to the point where the two leaf paths
diverged.

Disconnected graphs are handled component by component when only an automorphism is wanted: a (color-preserving)
nontrivial automorphism exists iff some component has one or two components are isomorphic as colored graphs.
"""

from dataclasses import dataclass, field
from typing import Optional, Sequence

from logzero import logger
from pydantic import BaseModel, ConfigDict

from d2ctools.graphs.core import Graph, TwoColoring, connected_components, relabel
from d2ctools.graphs.formats import write_graph6
from d2ctools.iso.permutations import Permutation
from d2ctools.iso.refinement import OrderedPartition, _Partition


class CertificateError(RuntimeError):
    """An internally produced certificate failed re-verification; this is always an implementation bug."""


class CanonicalForm(BaseModel):
    """`key` is `write_graph6(canon)` for an uncolored graph.

    For a colored graph it is that graph6 string followed by ":" and the colors of canon's vertices in order
    (e.g. "BW:112"), so a colored key is not itself valid graph6.
    """

    model_config = ConfigDict(frozen=True)

    labeling: Permutation
    canon: Graph
    key: str


@dataclass
class _Leaf:
    order: list[int]
    certificate: tuple[int, ...]
    path: tuple[int, ...]


@dataclass
class _Frame:
    partition: _Partition
    path: tuple[int, ...]
    candidates: list[int]
    position: int = 0
    explored: list[int] = field(default_factory=list)


def _bit_index(a: int, b: int) -> int:
    if a > b:
        a, b = b, a
    return b * (b - 1) // 2 + a


def _initial_cells(n: int, coloring: Optional[TwoColoring]) -> tuple[tuple[int, ...], ...]:
    if coloring is None:
        return OrderedPartition.unit(n).cells
    if len(coloring) != n:
        raise ValueError(f"coloring has length {len(coloring)} but the graph has {n} vertices")
    return OrderedPartition.from_coloring(coloring).cells


def _common_prefix(a: Sequence[int], b: Sequence[int]) -> int:
    d = 0
    while d < len(a) and d < len(b) and a[d] == b[d]:
        d += 1
    return d


class _SearchTree:
    def __init__(self, g: Graph, coloring: Optional[TwoColoring] = None, stop_at_first_automorphism: bool = False):
        self.g = g
        self.coloring = coloring
        self.stop_at_first_automorphism = stop_at_first_automorphism
        self.edges = list(g.edges)
        self.automorphisms: list[Permutation] = []
        self.first: Optional[_Leaf] = None
        self.best: Optional[_Leaf] = None
        self.nodes = 0
        self.leaves = 0
        self.done = False

    def run(self) -> "_SearchTree":
        g = self.g
        root = _Partition.from_cells(g.n, _initial_cells(g.n, self.coloring))
        root.refine(g.adjacency, list(root.starts()))
        self.nodes = 1
        if root.is_discrete:
            self._visit_leaf(root, ())
            return self

        stack = [self._frame(root, ())]
        while stack:
            frame = stack[-1]
            v = self._next_child(frame)
            if v is None:
                stack.pop()
                continue
            child = frame.partition.copy()
            start = child.individualize(v)
            child.refine(g.adjacency, [start])
            path = frame.path + (v,)
            self.nodes += 1
            if not child.is_discrete:
                stack.append(self._frame(child, path))
                continue
            jump = self._visit_leaf(child, path)
            if self.done:
                break
            if jump is not None:
                del stack[jump + 1 :]
        logger.debug(
            f"search n={g.n} colored={self.coloring is not None} nodes={self.nodes} leaves={self.leaves} "
            f"automorphisms={len(self.automorphisms)}"
        )
        return self

    @staticmethod
    def _frame(partition: _Partition, path: tuple[int, ...]) -> _Frame:
        target = partition.target_cell()
        return _Frame(partition=partition, path=path, candidates=sorted(partition.cell_members(target)))

    def _next_child(self, frame: _Frame) -> Optional[int]:
        while frame.position < len(frame.candidates):
            v = frame.candidates[frame.position]
            frame.position += 1
            if frame.explored and self._in_explored_orbit(frame, v):
                continue
            frame.explored.append(v)
            return v
        return None

    def _in_explored_orbit(self, frame: _Frame, v: int) -> bool:
        generators = [a.p for a in self.automorphisms if all(a.p[x] == x for x in frame.path)]
        if not generators:
            return False
        orbit = {v}
        todo = [v]
        while todo:
            x = todo.pop()
            for a in generators:
                y = a[x]
                if y not in orbit:
                    orbit.add(y)
                    todo.append(y)
        return any(w in orbit for w in frame.explored)

    def _visit_leaf(self, partition: _Partition, path: tuple[int, ...]) -> Optional[int]:
        """Returns the depth to jump back to when the leaf revealed an automorphism."""
        self.leaves += 1
        order = partition.order[:]
        label = [0] * len(order)
        for position, v in enumerate(order):
            label[v] = position
        certificate = tuple(sorted(_bit_index(label[u], label[v]) for u, v in self.edges))
        leaf = _Leaf(order=order, certificate=certificate, path=path)
        if self.first is None:
            self.first = self.best = leaf
            return None
        for reference in (self.first, self.best):
            if certificate == reference.certificate:
                self._record_automorphism(reference, leaf)
                return _common_prefix(reference.path, path)
        if certificate > self.best.certificate:
            self.best = leaf
        return None

    def _record_automorphism(self, reference: _Leaf, leaf: _Leaf) -> None:
        images = [0] * len(leaf.order)
        for x, y in zip(reference.order, leaf.order):
            images[x] = y
        gamma = Permutation(p=tuple(images))
        if gamma.is_identity or not gamma.is_color_preserving_automorphism(self.g, self.coloring):
            raise CertificateError(f"leaf comparison produced an invalid automorphism {list(gamma.p)}")
        self.automorphisms.append(gamma)
        if self.stop_at_first_automorphism:
            self.done = True

    def canonical_form(self) -> CanonicalForm:
        positions = [0] * self.g.n
        for position, v in enumerate(self.best.order):
            positions[v] = position
        labeling = Permutation(p=tuple(positions))
        canon = relabel(self.g, labeling.p)
        key = write_graph6(canon)
        if self.coloring is not None:
            canonical_colors = [0] * self.g.n
            for v, position in enumerate(positions):
                canonical_colors[position] = self.coloring[v]
            key = f"{key}:{''.join(map(str, canonical_colors))}"
        return CanonicalForm(labeling=labeling, canon=canon, key=key)


def canonical_form(g: Graph, colors: Optional[TwoColoring] = None) -> CanonicalForm:
    """Isomorphism-invariant representative of g (or of the colored graph (g, colors)).

    Colors are absolute: only relabelings mapping color 1 to color 1 and color 2 to color 2 are considered, and
    the key of a colored graph carries the canonical color sequence after the graph6 string.
    """
    if g.n == 0:
        return CanonicalForm(labeling=Permutation.identity(0), canon=g, key=write_graph6(g))
    return _SearchTree(g, colors).run().canonical_form()


def isomorphism_between(source: CanonicalForm, target: CanonicalForm) -> Permutation:
    """The map source-graph -> target-graph obtained by composing canonical labelings (keys must match)."""
    if source.key != target.key:
        raise ValueError("canonical keys differ; the graphs are not isomorphic")
    return source.labeling.then(target.labeling.inverse())


def are_isomorphic(g1: Graph, g2: Graph) -> Optional[Permutation]:
    if g1.n != g2.n or g1.m != g2.m:
        return None
    if sorted(map(len, g1.adjacency)) != sorted(map(len, g2.adjacency)):
        return None
    form1, form2 = canonical_form(g1), canonical_form(g2)
    if form1.key != form2.key:
        return None
    mapping = isomorphism_between(form1, form2)
    if not mapping.maps_onto(g1, g2):
        raise CertificateError(f"composed canonical labelings do not map g1 onto g2: {list(mapping.p)}")
    return mapping


def _restrict_coloring(coloring: Optional[TwoColoring], vertex_map: Sequence[int]) -> Optional[TwoColoring]:
    if coloring is None:
        return None
    return TwoColoring(colors=tuple(coloring[v] for v in vertex_map))


def _find_nta(g: Graph, coloring: Optional[TwoColoring]) -> Optional[Permutation]:
    components = connected_components(g)
    if len(components) <= 1:
        tree = _SearchTree(g, coloring, stop_at_first_automorphism=True).run()
        return tree.automorphisms[0] if tree.automorphisms else None

    forms: list[CanonicalForm] = []
    classes: dict[str, list[int]] = {}
    for index, (component, vertex_map) in enumerate(components):
        local_coloring = _restrict_coloring(coloring, vertex_map)
        tree = _SearchTree(component, local_coloring).run()
        if tree.automorphisms:
            images = list(range(g.n))
            for local, image in enumerate(tree.automorphisms[0].p):
                images[vertex_map[local]] = vertex_map[image]
            return Permutation(p=tuple(images))
        form = tree.canonical_form()
        forms.append(form)
        classes.setdefault(form.key, []).append(index)

    for members in classes.values():
        if len(members) < 2:
            continue
        a, b = members[:2]
        phi = isomorphism_between(forms[a], forms[b])
        map_a, map_b = components[a][1], components[b][1]
        images = list(range(g.n))
        for local, image in enumerate(phi.p):
            images[map_a[local]] = map_b[image]
            images[map_b[image]] = map_a[local]
        return Permutation(p=tuple(images))
    return None


def has_nta(g: Graph) -> Optional[Permutation]:
    """A nontrivial automorphism of g, or None when g is asymmetric."""
    nta = _find_nta(g, None)
    if nta is not None and (nta.is_identity or not nta.is_automorphism_of(g)):
        raise CertificateError(f"has_nta produced an invalid certificate {list(nta.p)}")
    return nta


def has_color_preserving_nta(g: Graph, c: TwoColoring) -> Optional[Permutation]:
    """A nontrivial automorphism p of g with c[p[v]] == c[v] for every v, or None when c is distinguishing."""
    if len(c) != g.n:
        raise ValueError(f"coloring has length {len(c)} but the graph has {g.n} vertices")
    nta = _find_nta(g, c)
    if nta is not None and (nta.is_identity or not nta.is_color_preserving_automorphism(g, c)):
        raise CertificateError(f"has_color_preserving_nta produced an invalid certificate {list(nta.p)}")
    return nta

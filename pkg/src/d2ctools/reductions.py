"""
The two many-one reductions between graph automorphism (GA: "has g a nontrivial automorphism?") and CC
("is the connected graph g not distinguishing-2-colorable?"), plus the maps that carry automorphisms across them.

GA -> CC: make the input connected (complement it if needed), then subdivide every edge. The subdivided graph is
connected and bipartite with originals on one side, and its side-preserving automorphisms are exactly the lifted
automorphisms of the source.

CC -> GA: degenerate inputs map to fixed answers (K1 for NO, K2 for YES); an unbalanced bipartite graph is its own
GA instance; a balanced one gets the a-b-c gadget hung off the class X containing vertex 0, which unbalances the
classes and pins the orientation.
"""

from enum import Enum
from typing import Literal, Optional

from logzero import logger
from pydantic import BaseModel, ConfigDict, model_validator

from d2ctools.graphs.core import (
    Graph,
    NotConnectedError,
    SubdivisionMap,
    TwoColoring,
    bipartition,
    complement,
    is_connected,
    subdivide,
)
from d2ctools.iso.canonical import CertificateError, has_nta
from d2ctools.iso.permutations import Permutation


class NotAnAutomorphismError(ValueError):
    pass


class CycleCaseError(ValueError):
    pass


class GadgetConsistencyError(RuntimeError):
    pass


class GaToCcCase(str, Enum):
    SUBDIVIDED = "SUBDIVIDED"
    TRIVIAL = "TRIVIAL"


class CcToGaCase(str, Enum):
    K1_OR_K2 = "K1_OR_K2"
    NON_BIPARTITE = "NON_BIPARTITE"
    UNBALANCED = "UNBALANCED"
    BALANCED = "BALANCED"


class GaToCcResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    graph: Graph
    subdivision_map: Optional[SubdivisionMap] = None
    complemented: bool = False
    case: GaToCcCase
    note: str = ""


class GadgetMap(BaseModel):
    """Provenance for the balanced CC -> GA case; original vertices keep their ids 0..n-1."""

    model_config = ConfigDict(frozen=True)

    source: Graph
    a: int
    b: int
    c: int
    x_color: Literal[1, 2] = 1
    x_vertices: tuple[int, ...]

    @model_validator(mode="after")
    def _check_ids(self) -> "GadgetMap":
        n = self.source.n
        if (self.a, self.b, self.c) != (n, n + 1, n + 2):
            raise ValueError(f"gadget vertices must be {n}, {n + 1}, {n + 2}")
        if any(not 0 <= x < n for x in self.x_vertices):
            raise ValueError("x_vertices must be source vertices")
        return self

    def __eq__(self, other):
        if not isinstance(other, GadgetMap):
            return NotImplemented
        return (self.source, self.x_color, self.x_vertices) == (other.source, other.x_color, other.x_vertices)

    def __hash__(self):
        return hash((self.source, self.x_color, self.x_vertices))

    def gadget_graph(self) -> Graph:
        edges = set(self.source.edges)
        edges.update((x, self.a) for x in self.x_vertices)
        edges.add((self.a, self.b))
        edges.add((self.b, self.c))
        return Graph(n=self.source.n + 3, edges=frozenset(edges))

    def source_coloring(self) -> TwoColoring:
        xs = set(self.x_vertices)
        other = 3 - self.x_color
        return TwoColoring(colors=tuple(self.x_color if v in xs else other for v in range(self.source.n)))


class CcToGaResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    graph: Graph
    gadget_map: Optional[GadgetMap] = None
    case: CcToGaCase


def ga_to_cc(g: Graph) -> GaToCcResult:
    if g.n == 0:
        raise ValueError("the empty graph is not a GA instance")
    complemented = not is_connected(g)
    h = complement(g) if complemented else g
    note = "input was disconnected; reduced its complement" if complemented else ""
    if h.n == 1:
        logger.debug("ga_to_cc: K1, emitting K1")
        return GaToCcResult(graph=h, complemented=complemented, case=GaToCcCase.TRIVIAL, note=note or "K1")
    subdivided, mapping = subdivide(h)
    logger.debug(f"ga_to_cc: subdivided n={h.n} m={h.m} into n={subdivided.n} complemented={complemented}")
    return GaToCcResult(
        graph=subdivided, subdivision_map=mapping, complemented=complemented, case=GaToCcCase.SUBDIVIDED, note=note
    )


def lift_nta_to_subdivision(f: Permutation, m: SubdivisionMap) -> Permutation:
    source = m.source_graph()
    if len(f) != m.source_n or not f.is_automorphism_of(source):
        raise NotAnAutomorphismError("f is not an automorphism of the graph that was subdivided")
    images = list(f.p)
    for x in range(m.source_n, len(m)):
        u, v = m.edge_of(x)
        images.append(m.edge_vertex_id(f[u], f[v]))
    lifted = Permutation(p=tuple(images))
    if not lifted.is_color_preserving_automorphism(m.subdivided_graph(), m.side_coloring()):
        raise CertificateError(f"lifted map {images} is not a side-preserving automorphism")
    return lifted


def restrict_nta_from_subdivision(f_prime: Permutation, m: SubdivisionMap) -> Permutation:
    if len(f_prime) != len(m) or not f_prime.is_automorphism_of(m.subdivided_graph()):
        raise NotAnAutomorphismError("f_prime is not an automorphism of the subdivided graph")
    for v in range(m.source_n):
        if not m.is_original(f_prime[v]):
            raise CycleCaseError(
                f"original vertex {v} maps to edge vertex {f_prime[v]}; only possible when the source graph "
                f"is a chordless cycle"
            )
    restricted = Permutation(p=f_prime.p[: m.source_n])
    if not restricted.is_automorphism_of(m.source_graph()):
        raise CertificateError(f"restriction {list(restricted.p)} is not an automorphism of the source graph")
    return restricted


def cc_to_ga(g: Graph) -> CcToGaResult:
    if g.n == 0:
        raise ValueError("the empty graph is not a CC instance")
    if not is_connected(g):
        raise NotConnectedError("CC is defined on connected graphs only")
    if g.n <= 2:
        return CcToGaResult(graph=Graph(n=1), case=CcToGaCase.K1_OR_K2)
    coloring = bipartition(g)
    if not isinstance(coloring, TwoColoring):
        return CcToGaResult(graph=Graph(n=2, edges=frozenset({(0, 1)})), case=CcToGaCase.NON_BIPARTITE)
    # vertex 0 is always colored 1, so X is the color 1 class
    xs, ys = coloring.class_of(1), coloring.class_of(2)
    if len(xs) != len(ys):
        return CcToGaResult(graph=g, case=CcToGaCase.UNBALANCED)
    n = g.n
    gadget = GadgetMap(source=g, a=n, b=n + 1, c=n + 2, x_color=1, x_vertices=xs)
    logger.debug(f"cc_to_ga: balanced classes of size {len(xs)}, gadget at {n}, {n + 1}, {n + 2}")
    return CcToGaResult(graph=gadget.gadget_graph(), gadget_map=gadget, case=CcToGaCase.BALANCED)


def lift_nta_to_gadget(f: Permutation, m: GadgetMap) -> Permutation:
    if len(f) != m.source.n or not f.is_color_preserving_automorphism(m.source, m.source_coloring()):
        raise NotAnAutomorphismError("f is not an automorphism preserving the bipartition of the source graph")
    lifted = Permutation(p=f.p + (m.a, m.b, m.c))
    if not lifted.is_automorphism_of(m.gadget_graph()):
        raise CertificateError(f"lifted map {list(lifted.p)} is not an automorphism of the gadget graph")
    return lifted


def restrict_gadget_nta(f: Permutation, m: GadgetMap) -> Permutation:
    if len(f) != m.source.n + 3 or not f.is_automorphism_of(m.gadget_graph()):
        raise NotAnAutomorphismError("f is not an automorphism of the gadget graph")
    if (f[m.a], f[m.b], f[m.c]) != (m.a, m.b, m.c):
        raise GadgetConsistencyError(
            f"automorphism moves the gadget: a->{f[m.a]}, b->{f[m.b]}, c->{f[m.c]} (expected fixed points)"
        )
    restricted = Permutation(p=f.p[: m.source.n])
    if not restricted.is_color_preserving_automorphism(m.source, m.source_coloring()):
        raise CertificateError(f"restriction {list(restricted.p)} does not preserve the source bipartition")
    return restricted


def decide_ga_by_reduction(g: Graph) -> bool:
    """True when g has a nontrivial automorphism, answered by deciding D2C on the reduced instance."""
    from d2ctools.d2c import decide_d2c

    return decide_d2c(ga_to_cc(g).graph).witness is None


def decide_cc_by_reduction(g: Graph) -> bool:
    """True when the connected graph g has no proper distinguishing 2-coloring, answered through GA."""
    return has_nta(cc_to_ga(g).graph) is not None

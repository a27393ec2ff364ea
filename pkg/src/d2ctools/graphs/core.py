"""
Simple undirected graphs on the vertex set 0..n-1 and the structural operations everything else is built on.

Key components:
- `Graph`: immutable vertex count plus a set of unordered edges, validated on construction.
- `TwoColoring`: a vertex -> {1, 2} map; used both for bipartitions and for candidate distinguishing colorings.
- `OddCycleCertificate`: the failure value of `bipartition`, an odd cycle proving the graph is not bipartite.
- `SubdivisionMap`: provenance for `subdivide`, tagging every vertex of the subdivided graph as either an
  original vertex or the vertex inserted into a source edge.
- `complement`, `connected_components`, `bipartition`, `subdivide`, `relabel`, `disjoint_union`, `is_connected`.
- `NotConnectedError` / `NotBipartiteError`: raised by operations defined only on connected or bipartite input.

Vertex identity is always a contiguous integer range, and every function here is deterministic: components are
ordered by their smallest vertex, breadth-first searches visit neighbours in ascending order, and the vertices
inserted by `subdivide` are numbered in lexicographic edge order.
"""

from collections import deque
from typing import Annotated, Literal, Optional, Sequence, Union

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator

Edge = tuple[int, int]
Component = tuple["Graph", tuple[int, ...]]


class NotConnectedError(ValueError):
    pass


class NotBipartiteError(ValueError):
    def __init__(self, certificate: "OddCycleCertificate"):
        self.certificate = certificate
        super().__init__(f"graph is not bipartite: odd cycle {list(certificate.cycle)}")


class Graph(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    edges: frozenset[tuple[int, int]] = frozenset()

    _adjacency: Optional[tuple[frozenset[int], ...]] = PrivateAttr(default=None)
    _neighbors: Optional[tuple[tuple[int, ...], ...]] = PrivateAttr(default=None)

    @field_validator("edges")
    @classmethod
    def _normalize_edges(cls, value: frozenset[tuple[int, int]]) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) if u <= v else (v, u) for u, v in value)

    @model_validator(mode="after")
    def _check_edges(self) -> "Graph":
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u < 0 or v >= self.n:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {self.n})")
        return self

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        if self._adjacency is None:
            adj: list[set[int]] = [set() for _ in range(self.n)]
            for u, v in self.edges:
                adj[u].add(v)
                adj[v].add(u)
            self._adjacency = tuple(frozenset(a) for a in adj)
        return self._adjacency

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbours of v in ascending order."""
        if self._neighbors is None:
            self._neighbors = tuple(tuple(sorted(a)) for a in self.adjacency)
        return self._neighbors[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges if u < v else (v, u) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


class TwoColoring(BaseModel):
    model_config = ConfigDict(frozen=True)

    colors: tuple[Literal[1, 2], ...]

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def class_of(self, color: Literal[1, 2]) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.colors) if c == color)

    def swapped(self) -> "TwoColoring":
        return TwoColoring(colors=tuple(3 - c for c in self.colors))

    def first_conflict(self, g: Graph) -> Optional[Edge]:
        """The smallest edge whose endpoints share a color, or None when the coloring is proper."""
        if len(self.colors) != g.n:
            raise ValueError(f"coloring has length {len(self.colors)} but the graph has {g.n} vertices")
        for u, v in g.sorted_edges():
            if self.colors[u] == self.colors[v]:
                return u, v
        return None

    def is_proper(self, g: Graph) -> bool:
        return self.first_conflict(g) is None


class OddCycleCertificate(BaseModel):
    model_config = ConfigDict(frozen=True)

    cycle: tuple[int, ...]

    @field_validator("cycle")
    @classmethod
    def _check_shape(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if len(value) < 3 or len(value) % 2 == 0:
            raise ValueError(f"an odd cycle needs odd length >= 3, got {len(value)}")
        if len(set(value)) != len(value):
            raise ValueError("cycle vertices must be distinct")
        return value

    def is_valid_for(self, g: Graph) -> bool:
        k = len(self.cycle)
        if any(not 0 <= v < g.n for v in self.cycle):
            return False
        return all(g.has_edge(self.cycle[i], self.cycle[(i + 1) % k]) for i in range(k))


class OriginalVertex(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["original"] = "original"
    vertex: int


class EdgeVertex(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["edge"] = "edge"
    u: int
    v: int


SubdivisionTag = Annotated[Union[OriginalVertex, EdgeVertex], Field(discriminator="kind")]


class SubdivisionMap(BaseModel):
    """Tags for every vertex of a subdivided graph.

    Vertex i < source_n is Original(i); vertex source_n + k is the vertex inserted into the k-th source edge
    in lexicographic order.
    """

    model_config = ConfigDict(frozen=True)

    source_n: int = Field(ge=0)
    tags: tuple[SubdivisionTag, ...]

    _edge_ids: Optional[dict[Edge, int]] = PrivateAttr(default=None)

    @model_validator(mode="after")
    def _check_layout(self) -> "SubdivisionMap":
        if len(self.tags) < self.source_n:
            raise ValueError("fewer tags than source vertices")
        for i, tag in enumerate(self.tags[: self.source_n]):
            if not isinstance(tag, OriginalVertex) or tag.vertex != i:
                raise ValueError(f"tag {i} must be Original({i})")
        seen = set()
        for tag in self.tags[self.source_n :]:
            if not isinstance(tag, EdgeVertex):
                raise ValueError("original tags must precede edge tags")
            if not 0 <= tag.u < tag.v < self.source_n:
                raise ValueError(f"EdgeVertex({tag.u}, {tag.v}) is not an edge on {self.source_n} vertices")
            if (tag.u, tag.v) in seen:
                raise ValueError(f"EdgeVertex({tag.u}, {tag.v}) appears twice")
            seen.add((tag.u, tag.v))
        return self

    def __eq__(self, other):
        if not isinstance(other, SubdivisionMap):
            return NotImplemented
        return self.source_n == other.source_n and self.tags == other.tags

    def __hash__(self):
        return hash((self.source_n, self.tags))

    def __len__(self):
        return len(self.tags)

    def is_original(self, x: int) -> bool:
        return x < self.source_n

    def edge_of(self, x: int) -> Edge:
        tag = self.tags[x]
        if not isinstance(tag, EdgeVertex):
            raise ValueError(f"vertex {x} is an original vertex, not an edge vertex")
        return tag.u, tag.v

    def edge_vertex_id(self, u: int, v: int) -> int:
        if self._edge_ids is None:
            self._edge_ids = {(t.u, t.v): x for x, t in enumerate(self.tags) if isinstance(t, EdgeVertex)}
        key = (u, v) if u < v else (v, u)
        try:
            return self._edge_ids[key]
        except KeyError:
            raise ValueError(f"({u}, {v}) is not an edge of the source graph") from None

    def source_graph(self) -> Graph:
        return Graph(n=self.source_n, edges=frozenset(self.edge_of(x) for x in range(self.source_n, len(self.tags))))

    def subdivided_graph(self) -> Graph:
        edges = set()
        for x in range(self.source_n, len(self.tags)):
            u, v = self.edge_of(x)
            edges.add((u, x))
            edges.add((v, x))
        return Graph(n=len(self.tags), edges=frozenset(edges))

    def side_coloring(self) -> TwoColoring:
        """The unique 2-coloring of the subdivided graph: originals get 1, edge vertices get 2."""
        return TwoColoring(colors=tuple(1 if self.is_original(x) else 2 for x in range(len(self.tags))))


def complement(g: Graph) -> Graph:
    edges = frozenset((u, v) for v in range(g.n) for u in range(v) if (u, v) not in g.edges)
    return Graph(n=g.n, edges=edges)


def connected_components(g: Graph) -> list[Component]:
    """Components ordered by smallest vertex; each comes with the map from its local ids back into g."""
    seen = [False] * g.n
    components = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        members = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    members.append(w)
                    queue.append(w)
        members.sort()
        local = {v: i for i, v in enumerate(members)}
        edges = frozenset((local[u], local[w]) for u in members for w in g.neighbors(u) if u < w)
        components.append((Graph(n=len(members), edges=edges), tuple(members)))
    return components


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def bipartition(g: Graph) -> TwoColoring | OddCycleCertificate:
    """Breadth-first 2-coloring; the smallest vertex of every component gets color 1.

    Returns an odd cycle instead when the graph is not bipartite.
    """
    color = [0] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if color[root]:
            continue
        color[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not color[w]:
                    color[w] = 3 - color[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return OddCycleCertificate(cycle=_close_odd_cycle(u, w, parent, depth))
    return TwoColoring(colors=tuple(color))


def _close_odd_cycle(u: int, w: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    # u and w are adjacent, same color, same BFS tree: their tree paths meet at a common ancestor
    path_u, path_w = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        path_u.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        path_w.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        path_u.append(a)
        path_w.append(b)
    return tuple(path_u + path_w[-2::-1])


def subdivide(g: Graph) -> tuple[Graph, SubdivisionMap]:
    tags: list[OriginalVertex | EdgeVertex] = [OriginalVertex(vertex=v) for v in range(g.n)]
    edges = set()
    for offset, (u, v) in enumerate(g.sorted_edges()):
        x = g.n + offset
        tags.append(EdgeVertex(u=u, v=v))
        edges.add((u, x))
        edges.add((v, x))
    mapping = SubdivisionMap(source_n=g.n, tags=tuple(tags))
    return Graph(n=len(tags), edges=frozenset(edges)), mapping


def relabel(g: Graph, p: Sequence[int]) -> Graph:
    """The image of g under the vertex map v -> p[v]."""
    if len(p) != g.n:
        raise ValueError(f"relabeling has length {len(p)} but the graph has {g.n} vertices")
    return Graph(n=g.n, edges=frozenset((p[u], p[v]) for u, v in g.edges))


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    edges = set()
    offset = 0
    for h in graphs:
        edges.update((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return Graph(n=offset, edges=frozenset(edges))

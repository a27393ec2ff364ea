"""
Color refinement (1-dimensional Weisfeiler-Leman) on ordered partitions.

`color_refine` splits cells until the partition is equitable: every vertex of a cell has the same number of
neighbours in each other cell. Splitting is driven by a queue of splitter cells identified by their start
position in the vertex order, and the fragments of a split cell are ordered by neighbour count, so the cell
sequence that comes out depends only on the graph's structure and the input cell sequence, never on vertex names.

The mutable `_Partition` is what the canonical labeling search copies and individualizes at every tree node;
`OrderedPartition` is the validated, immutable value handed to callers.
"""

from collections import Counter, deque
from typing import Iterator, Optional, Sequence

from pydantic import BaseModel, ConfigDict, field_validator

from d2ctools.graphs.core import Graph, TwoColoring


class OrderedPartition(BaseModel):
    model_config = ConfigDict(frozen=True)

    cells: tuple[tuple[int, ...], ...]

    @field_validator("cells")
    @classmethod
    def _check_cells(cls, value: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
        seen: set[int] = set()
        for cell in value:
            if not cell:
                raise ValueError("cells must be non-empty")
            for v in cell:
                if v in seen:
                    raise ValueError(f"vertex {v} appears in more than one cell")
                seen.add(v)
        return value

    @classmethod
    def unit(cls, n: int) -> "OrderedPartition":
        return cls(cells=(tuple(range(n)),) if n else ())

    @classmethod
    def from_coloring(cls, coloring: TwoColoring) -> "OrderedPartition":
        """Color 1 cell first, then color 2; empty classes are dropped."""
        return cls(cells=tuple(cell for cell in (coloring.class_of(1), coloring.class_of(2)) if cell))

    @property
    def n(self) -> int:
        return sum(len(cell) for cell in self.cells)

    @property
    def is_discrete(self) -> bool:
        return all(len(cell) == 1 for cell in self.cells)

    def covers(self, n: int) -> bool:
        return self.n == n and all(0 <= v < n for cell in self.cells for v in cell)

    def refines(self, other: "OrderedPartition") -> bool:
        owner = {v: i for i, cell in enumerate(other.cells) for v in cell}
        return all(len({owner.get(v) for v in cell}) == 1 and owner.get(cell[0]) is not None for cell in self.cells)

    def as_sets(self) -> list[frozenset[int]]:
        return [frozenset(cell) for cell in self.cells]


class _Partition:
    __slots__ = ("order", "cell_of", "size", "cells")

    def __init__(self, order: list[int], cell_of: list[int], size: list[int], cells: int):
        self.order = order  # position -> vertex
        self.cell_of = cell_of  # vertex -> start position of its cell
        self.size = size  # start position -> cell size
        self.cells = cells

    @classmethod
    def from_cells(cls, n: int, cells: Sequence[Sequence[int]]) -> "_Partition":
        order: list[int] = []
        cell_of = [0] * n
        size = [0] * n
        for cell in cells:
            start = len(order)
            size[start] = len(cell)
            for v in cell:
                cell_of[v] = start
                order.append(v)
        return cls(order, cell_of, size, len(cells))

    def copy(self) -> "_Partition":
        return _Partition(self.order[:], self.cell_of[:], self.size[:], self.cells)

    def starts(self) -> Iterator[int]:
        pos = 0
        while pos < len(self.order):
            yield pos
            pos += self.size[pos]

    @property
    def is_discrete(self) -> bool:
        return self.cells == len(self.order)

    def as_cells(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.order[s : s + self.size[s]]) for s in self.starts())

    def cell_members(self, start: int) -> list[int]:
        return self.order[start : start + self.size[start]]

    def target_cell(self) -> Optional[int]:
        """Start of the first smallest non-singleton cell."""
        best = None
        for start in self.starts():
            k = self.size[start]
            if k > 1 and (best is None or k < self.size[best]):
                best = start
                if k == 2:
                    break
        return best

    def individualize(self, v: int) -> int:
        """Split v off the front of its cell; returns the start of the new singleton cell."""
        start = self.cell_of[v]
        k = self.size[start]
        rest = [w for w in self.order[start : start + k] if w != v]
        self.order[start : start + k] = [v, *rest]
        self.size[start] = 1
        self.size[start + 1] = k - 1
        for w in rest:
            self.cell_of[w] = start + 1
        self.cells += 1
        return start

    def refine(self, adjacency: Sequence[frozenset[int]], splitters: Sequence[int]) -> None:
        n = len(self.order)
        order, cell_of, size = self.order, self.cell_of, self.size
        pending = deque(splitters)
        queued = set(splitters)
        while pending and self.cells < n:
            s = pending.popleft()
            queued.discard(s)
            counts: dict[int, int] = {}
            for v in order[s : s + size[s]]:
                for w in adjacency[v]:
                    counts[w] = counts.get(w, 0) + 1
            touched = sorted({cell_of[w] for w in counts if size[cell_of[w]] > 1})
            for x in touched:
                groups: dict[int, list[int]] = {}
                for v in order[x : x + size[x]]:
                    groups.setdefault(counts.get(v, 0), []).append(v)
                if len(groups) == 1:
                    continue
                fragments = [sorted(groups[c]) for c in sorted(groups)]
                new_starts = []
                pos = x
                for fragment in fragments:
                    new_starts.append(pos)
                    size[pos] = len(fragment)
                    for w in fragment:
                        order[pos] = w
                        cell_of[w] = new_starts[-1]
                        pos += 1
                self.cells += len(fragments) - 1
                if x in queued:
                    additions = new_starts[1:]
                else:
                    # skipping one largest fragment is enough: its counts follow from the others
                    largest = max(range(len(fragments)), key=lambda i: len(fragments[i]))
                    additions = [st for i, st in enumerate(new_starts) if i != largest]
                for st in additions:
                    pending.append(st)
                    queued.add(st)


def color_refine(g: Graph, initial: Optional[OrderedPartition] = None) -> OrderedPartition:
    initial = initial if initial is not None else OrderedPartition.unit(g.n)
    if not initial.covers(g.n):
        raise ValueError(f"initial partition does not cover the {g.n} vertices of the graph")
    partition = _Partition.from_cells(g.n, initial.cells)
    partition.refine(g.adjacency, list(partition.starts()))
    return OrderedPartition(cells=partition.as_cells())


def is_equitable(g: Graph, partition: OrderedPartition) -> bool:
    owner = {v: i for i, cell in enumerate(partition.cells) for v in cell}
    for cell in partition.cells:
        profiles = {frozenset(Counter(owner[w] for w in g.adjacency[v]).items()) for v in cell}
        if len(profiles) > 1:
            return False
    return True

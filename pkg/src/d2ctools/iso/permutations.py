from typing import Optional

from pydantic import BaseModel, ConfigDict, field_validator

from d2ctools.graphs.core import Graph, TwoColoring


class Permutation(BaseModel):
    """A bijection on 0..n-1; p[i] is the image of vertex i."""

    model_config = ConfigDict(frozen=True)

    p: tuple[int, ...]

    @field_validator("p")
    @classmethod
    def _check_bijective(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if sorted(value) != list(range(len(value))):
            raise ValueError(f"not a permutation of 0..{len(value) - 1}: {list(value)}")
        return value

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(p=tuple(range(n)))

    def __len__(self):
        return len(self.p)

    def __getitem__(self, v: int) -> int:
        return self.p[v]

    @property
    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.p))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.p)
        for i, x in enumerate(self.p):
            inv[x] = i
        return Permutation(p=tuple(inv))

    def then(self, other: "Permutation") -> "Permutation":
        """Apply self first, then other: v -> other[self[v]]."""
        if len(other) != len(self):
            raise ValueError("cannot compose permutations of different lengths")
        return Permutation(p=tuple(other.p[x] for x in self.p))

    def maps_onto(self, source: Graph, target: Graph) -> bool:
        """True when this permutation is an isomorphism from source onto target (edge-exact)."""
        if source.n != len(self.p) or target.n != len(self.p) or source.m != target.m:
            return False
        p = self.p
        return all(target.has_edge(p[u], p[v]) for u, v in source.edges)

    def is_automorphism_of(self, g: Graph) -> bool:
        return self.maps_onto(g, g)

    def preserves(self, coloring: TwoColoring) -> bool:
        if len(coloring) != len(self.p):
            return False
        return all(coloring[x] == coloring[i] for i, x in enumerate(self.p))

    def is_color_preserving_automorphism(self, g: Graph, coloring: Optional[TwoColoring]) -> bool:
        return self.is_automorphism_of(g) and (coloring is None or self.preserves(coloring))

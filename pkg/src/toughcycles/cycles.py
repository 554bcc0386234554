"""Oriented cycles with modular successor/predecessor arithmetic."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from toughcycles.graph import Graph, VertexSet, members


class CycleError(ValueError):
    pass


@dataclass(frozen=True)
class OrientedCycle:
    vertices: tuple[int, ...]
    position: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 3:
            raise CycleError(f"a cycle needs at least 3 vertices, got {len(verts)}")
        pos = {v: i for i, v in enumerate(verts)}
        if len(pos) != len(verts):
            raise CycleError(f"repeated vertex in {verts}")
        object.__setattr__(self, "position", pos)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, x: int) -> bool:
        return x in self.position

    @property
    def mask(self) -> VertexSet:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m

    def step(self, x: int, offset: int) -> int:
        try:
            i = self.position[x]
        except KeyError:
            raise CycleError(f"vertex {x} is not on the cycle") from None
        return self.vertices[(i + offset) % len(self.vertices)]

    def succ(self, x: int) -> int:
        return self.step(x, 1)

    def pred(self, x: int) -> int:
        return self.step(x, -1)

    def shift(self, vertices: VertexSet, offset: int) -> VertexSet:
        """``A+`` for offset 1, ``A-`` for offset -1 (on-cycle members only)."""
        out = 0
        for x in members(vertices):
            if x in self.position:
                out |= 1 << self.step(x, offset)
        return out

    def segment(self, a: int, b: int) -> tuple[int, ...]:
        """Vertices from ``a`` forward to ``b`` inclusive."""
        i, j = self.position[a], self.position[b]
        k = len(self.vertices)
        return tuple(self.vertices[(i + t) % k] for t in range((j - i) % k + 1))

    def gap(self, a: int, b: int) -> int:
        """Number of forward steps from ``a`` to ``b``."""
        return (self.position[b] - self.position[a]) % len(self.vertices)

    def reversed(self) -> "OrientedCycle":
        return OrientedCycle(self.vertices[::-1])

    def rotated_to(self, x: int) -> "OrientedCycle":
        i = self.position[x]
        return OrientedCycle(self.vertices[i:] + self.vertices[:i])

    def canonical_key(self) -> tuple[int, ...]:
        """Lexicographically least rotation over both orientations."""
        k = len(self.vertices)
        start = min(self.vertices)
        i = self.position[start]
        fwd = tuple(self.vertices[(i + t) % k] for t in range(k))
        back = tuple(self.vertices[(i - t) % k] for t in range(k))
        return min(fwd, back)

    def is_valid_in(self, g: Graph) -> bool:
        vs = self.vertices
        return all(0 <= v < g.n for v in vs) and all(
            g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))
        )

    def __repr__(self) -> str:
        return f"OrientedCycle({self.vertices})"


def cycle_step(c: OrientedCycle, x: int, offset: int) -> int:
    return c.step(x, offset)


def as_cycle(vertices: Iterable[int] | Sequence[int]) -> OrientedCycle:
    return OrientedCycle(tuple(vertices))

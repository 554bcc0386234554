"""Immutable simple graphs on at most 64 vertices, stored as neighbor bitsets.

Vertex sets are plain ``int`` bitmasks throughout the package: bit ``i`` set
means vertex ``i`` is a member.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

MAX_VERTICES = 64

VertexSet = int


class GraphFormatError(ValueError):
    """Raised for malformed graph6 or edge-list input."""

    def __init__(self, message: str, offset: Optional[int] = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def bit(v: int) -> int:
    return 1 << v


def members(mask: VertexSet) -> list[int]:
    """Vertices of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: VertexSet) -> int:
    return mask.bit_count()


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {i} has a neighbor out of range")
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
            for j in members(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) out of range for n={n}")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return cls(n, tuple(adj))

    @property
    def vertex_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def neighborhood(self, vertices: VertexSet) -> VertexSet:
        """Union of the neighbor sets of ``vertices``."""
        out = 0
        for v in members(vertices):
            out |= self.adj[v]
        return out

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> b & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.adj):
            for j in members(row >> (i + 1)):
                yield i, i + 1 + j

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def is_complete(self) -> bool:
        full = self.vertex_mask
        return all(row | 1 << i == full for i, row in enumerate(self.adj))

    def is_independent(self, vertices: VertexSet) -> bool:
        return all(not (self.adj[v] & vertices) for v in members(vertices))

    def reachable(self, start: int, allowed: VertexSet) -> VertexSet:
        """Vertices reachable from ``start`` inside the induced subgraph on ``allowed``."""
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= self.adj[v]
            frontier = nxt & allowed & ~seen
            seen |= frontier
        return seen

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return self.reachable(0, self.vertex_mask) == self.vertex_mask

    def relabel(self, order: list[int]) -> "Graph":
        """Graph whose vertex ``i`` is the old vertex ``order[i]``."""
        new_of = {old: new for new, old in enumerate(order)}
        adj = []
        for old in order:
            adj.append(mask_of(new_of[w] for w in members(self.adj[old])))
        return Graph(self.n, tuple(adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, g6={write_graph6(self)!r})"


def distance(g: Graph, x: int, y: int) -> Optional[int]:
    """Hop count of a shortest x-y path, or None when y is unreachable."""
    if x == y:
        return 0
    seen = 1 << x
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in members(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        if frontier >> y & 1:
            return d
        seen |= frontier
    return None


def distance_two_pairs(g: Graph) -> Iterator[tuple[int, int]]:
    """Pairs x < y with d(x, y) = 2: non-adjacent with a common neighbor."""
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if not g.adj[x] >> y & 1 and g.adj[x] & g.adj[y]:
                yield x, y


# graph6 --------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return chr(126) + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def write_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        body.append(chr(value + 63))
    return _encode_size(g.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    line = text.rstrip("\r\n")
    start = len(_G6_HEADER) if line.startswith(_G6_HEADER) else 0
    data = line.encode("ascii", errors="replace")
    pos = start
    for k in range(start, len(data)):
        if not 63 <= data[k] <= 126:
            raise GraphFormatError(f"byte {data[k]!r} outside the graph6 range 63..126", k)
    if pos >= len(data):
        raise GraphFormatError("missing size header", pos)
    if data[pos] < 126:
        n = data[pos] - 63
        pos += 1
    else:
        if pos + 4 > len(data):
            raise GraphFormatError("truncated long size header", pos)
        if data[pos + 1] == 126:
            raise GraphFormatError("8-byte size headers exceed the 64-vertex capacity", pos)
        n = 0
        for k in range(pos + 1, pos + 4):
            n = n << 6 | (data[k] - 63)
        if n <= 62:
            raise GraphFormatError("non-minimal size header", pos)
        pos += 4
    if n > MAX_VERTICES:
        raise GraphFormatError(f"{n} vertices exceeds capacity {MAX_VERTICES}", start)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise GraphFormatError(f"expected {nbytes} data bytes, found {len(body)}", len(data))
    if len(body) > nbytes:
        raise GraphFormatError("trailing bytes after the edge field", pos + nbytes)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise GraphFormatError("nonzero padding bits", pos + nbytes - 1)
    return Graph(n, tuple(adj))


# edge lists ------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n i j i j ..."``; duplicate pairs collapse."""
    tokens = text.split()
    if not tokens:
        raise GraphFormatError("empty edge list")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise GraphFormatError(f"non-integer token: {exc}") from None
    n, rest = values[0], values[1:]
    if not 1 <= n <= MAX_VERTICES:
        raise GraphFormatError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    if len(rest) % 2:
        raise GraphFormatError("odd number of endpoint tokens")
    adj = [0] * n
    for a, b in zip(rest[::2], rest[1::2]):
        if a == b:
            raise GraphFormatError(f"self-loop at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(f"edge ({a}, {b}) has an index outside 0..{n - 1}")
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return Graph(n, tuple(adj))


def write_edge_list(g: Graph) -> str:
    parts = [str(g.n)]
    for a, b in g.edges():
        parts += [str(a), str(b)]
    return " ".join(parts)

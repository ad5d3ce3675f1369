"""Simple undirected graphs: representation, graph6 I/O, structural invariants, generators.

Vertices are 0-indexed. Graphs are immutable once built.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

import numpy as np

MAX_G6_ORDER = 258047
FAMILY_KINDS = ("complete", "star", "path", "cycle", "complete_bipartite", "gnp", "exhaustive")


class Graph6Error(ValueError):
    """Malformed graph6 record; ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Graph:
    """Simple undirected graph on vertices ``0..n-1`` backed by a dense boolean matrix."""

    __slots__ = ("n", "adjacency", "degrees", "m", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError(f"graph order must be >= 1, got {n}")
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u, v] = adj[v, u] = True
        self._init(adj)

    def _init(self, adj: np.ndarray) -> None:
        adj.setflags(write=False)
        self.n = adj.shape[0]
        self.adjacency = adj
        self.degrees = tuple(int(d) for d in adj.sum(axis=1))
        self.m = sum(self.degrees) // 2

    @classmethod
    def from_adjacency(cls, adj) -> "Graph":
        a = np.array(adj, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise ValueError("adjacency must be a non-empty square matrix")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency must be symmetric")
        if a.diagonal().any():
            raise ValueError("adjacency diagonal must be empty")
        g = cls.__new__(cls)
        g._init(a)
        return g

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(v) for v in np.flatnonzero(row)) for row in self.adjacency)

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.adjacency, 1))
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self):
        return hash((self.n, self.adjacency.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, g6={to_graph6(self)!r})"


class BasicInvariants(NamedTuple):
    n: int
    m: int
    max_degree: int
    min_degree: int
    avg_degree: float


def basic_invariants(g: Graph) -> BasicInvariants:
    return BasicInvariants(g.n, g.m, max(g.degrees), min(g.degrees), 2 * g.m / g.n)


def zagreb_m1(g: Graph) -> int:
    """First Zagreb index: sum of squared vertex degrees (exact integer)."""
    return sum(d * d for d in g.degrees)


def _bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    nbrs = g.neighbors
    while queue:
        u = queue.popleft()
        for v in nbrs[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def is_connected(g: Graph) -> bool:
    return min(_bfs_distances(g, 0)) >= 0


def diameter(g: Graph) -> int:
    """Largest shortest-path distance; raises ValueError on a disconnected graph."""
    best = 0
    for s in range(g.n):
        dist = _bfs_distances(g, s)
        if min(dist) < 0:
            raise ValueError("diameter is undefined for a disconnected graph")
        best = max(best, max(dist))
    return best


# -- graph6 -----------------------------------------------------------------
#
# Upper-triangle bits are packed column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
# six per byte, most significant first, each byte offset by 63.


def _pair_indices(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Row/column index arrays of the upper triangle in graph6 (column-major) order."""
    # strict lower triangle in row-major order is (j, i), i < j, ordered by j then i
    j, i = np.tril_indices(n, -1)
    return i, j


def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= MAX_G6_ORDER:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    raise ValueError(f"graph6 order {n} exceeds {MAX_G6_ORDER}")


def to_graph6(g: Graph) -> str:
    rows, cols = _pair_indices(g.n)
    bits = g.adjacency[rows, cols].astype(np.uint8)
    pad = -len(bits) % 6
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)]).reshape(-1, 6)
    payload = bits @ np.array([32, 16, 8, 4, 2, 1], dtype=np.int64) + 63
    return (_encode_size(g.n) + payload.astype(np.uint8).tobytes()).decode("ascii")


def from_graph6(text: str) -> Graph:
    """Parse one header-less graph6 record (surrounding whitespace is ignored)."""
    s = text.strip()
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        pos = next(i for i, ch in enumerate(s) if ord(ch) > 127)
        raise Graph6Error("non-ASCII character", pos) from None
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside [63, 126]", i)
    if not data:
        raise Graph6Error("empty record", 0)
    if data[0] != 126:
        n, start = data[0] - 63, 1
    else:
        if len(data) < 4:
            raise Graph6Error("truncated extended size field", len(data))
        if data[1] == 126:
            raise Graph6Error(f"orders above {MAX_G6_ORDER} are not supported", 1)
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        start = 4
        if n <= 62:
            raise Graph6Error("extended size field used for n <= 62", 1)
    if n < 1:
        raise Graph6Error("graph order must be >= 1", 0)
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(data) - start != nbytes:
        raise Graph6Error(
            f"expected {nbytes} edge bytes for n={n}, got {len(data) - start}",
            min(len(data), start + nbytes),
        )
    payload = np.frombuffer(data[start:], dtype=np.uint8) - 63
    bits = np.unpackbits(payload[:, None], axis=1)[:, 2:].ravel()
    if bits[nbits:].any():
        raise Graph6Error("nonzero padding bits", len(data) - 1)
    rows, cols = _pair_indices(n)
    adj = np.zeros((n, n), dtype=bool)
    adj[rows, cols] = bits[:nbits].astype(bool)
    adj |= adj.T
    return Graph.from_adjacency(adj)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, record)`` for non-blank, non-comment lines."""
    for lineno, line in enumerate(lines, 1):
        s = line.strip()
        if s and not s.startswith("#"):
            yield lineno, s


# -- generators -------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """Declarative description of a graph family or random ensemble.

    ``gnp`` draws one uniform double per vertex pair from numpy's PCG64 bit
    generator seeded with ``seed``, pairs visited in graph6 order, and keeps the
    edge when the draw is below ``p``. Successive samples continue the same
    stream. ``samples=None`` makes the stream infinite.
    """

    kind: str
    n: int | None = None
    a: int | None = None
    b: int | None = None
    p: float | None = None
    seed: int | None = None
    samples: int | None = None
    connected_only: bool = False

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind == "complete_bipartite":
            if self.a is None or self.b is None or self.a < 1 or self.b < 1:
                raise ValueError("complete_bipartite requires a >= 1 and b >= 1")
            return
        if self.n is None:
            raise ValueError(f"{self.kind} requires n")
        if self.kind in ("complete", "star", "path", "cycle") and self.n < 2:
            raise ValueError(f"{self.kind} requires n >= 2")
        if self.kind == "cycle" and self.n < 3:
            raise ValueError("cycle requires n >= 3")
        if self.kind == "exhaustive" and not 2 <= self.n <= 7:
            raise ValueError("exhaustive requires 2 <= n <= 7")
        if self.kind == "gnp":
            if self.n < 1:
                raise ValueError("gnp requires n >= 1")
            if self.p is None or not 0.0 <= self.p <= 1.0:
                raise ValueError("gnp requires 0 <= p <= 1")
            if self.seed is None or not 0 <= self.seed < 2**64:
                raise ValueError("gnp requires an explicit 64-bit seed")
            if self.samples is not None and self.samples < 0:
                raise ValueError("samples must be non-negative")


def complete_graph(n: int) -> Graph:
    return Graph.from_adjacency(~np.eye(n, dtype=bool))


def star_graph(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    return Graph(n, ((0, v) for v in range(1, n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((v, v + 1) for v in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, ((v, (v + 1) % n) for v in range(n)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def gnp_stream(n: int, p: float, seed: int, samples: int | None = None) -> Iterator[Graph]:
    rng = np.random.Generator(np.random.PCG64(seed))
    rows, cols = _pair_indices(n)
    count = 0
    while samples is None or count < samples:
        keep = rng.random(len(rows)) < p
        adj = np.zeros((n, n), dtype=bool)
        adj[rows[keep], cols[keep]] = True
        adj |= adj.T
        yield Graph.from_adjacency(adj)
        count += 1


def exhaustive(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """Every labeled graph on n vertices; bit i of the mask is the i-th pair in graph6 order."""
    rows, cols = _pair_indices(n)
    shifts = np.arange(len(rows), dtype=np.int64)
    for mask in range(1 << len(rows)):
        bits = (mask >> shifts) & 1
        adj = np.zeros((n, n), dtype=bool)
        adj[rows, cols] = bits.astype(bool)
        adj |= adj.T
        g = Graph.from_adjacency(adj)
        if not connected_only or is_connected(g):
            yield g


def generate(spec: FamilySpec) -> Iterator[Graph]:
    if spec.kind == "gnp":
        stream = gnp_stream(spec.n, spec.p, spec.seed, spec.samples)
        if spec.connected_only:
            stream = (g for g in stream if is_connected(g))
        yield from stream
        return
    if spec.kind == "exhaustive":
        yield from exhaustive(spec.n, spec.connected_only)
        return
    if spec.kind == "complete_bipartite":
        yield complete_bipartite_graph(spec.a, spec.b)
        return
    builder = {"complete": complete_graph, "star": star_graph, "path": path_graph, "cycle": cycle_graph}
    yield builder[spec.kind](spec.n)

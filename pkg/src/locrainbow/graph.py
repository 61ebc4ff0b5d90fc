"""Simple undirected graphs on vertices 1..n, family generators and BFS metrics.

Vertices are 1-indexed everywhere, matching the labels v_1..v_n used by the
constructions. Internally adjacency is stored 0-indexed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import InvalidOrderError, NotConnectedError, ParseError

UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[frozenset[int], ...]  # adjacency[v - 1] = neighbors of v (1-indexed ids)

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise ValueError(f"adjacency has {len(self.adjacency)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adjacency, start=1):
            for u in nbrs:
                if not 1 <= u <= self.n:
                    raise ValueError(f"vertex {u} out of range 1..{self.n}")
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                if v not in self.adjacency[u - 1]:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            adj[u - 1].add(v)
            adj[v - 1].add(u)
        return cls(n, tuple(frozenset(a) for a in adj))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v - 1]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v - 1])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u - 1]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u in self.vertices:
            for v in sorted(self.adjacency[u - 1]):
                if u < v:
                    yield (u, v)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    @cached_property
    def distances(self) -> DistanceMatrix:
        return all_pairs_distances(self)

    def is_connected(self) -> bool:
        return self.n == 0 or UNREACHABLE not in self.distances.row(1)

    def is_cycle(self) -> bool:
        return self.n >= 3 and self.m == self.n and all(len(a) == 2 for a in self.adjacency) and self.is_connected()


class DistanceMatrix:
    """Hop distances indexed as ``d[u, v]`` with 1-indexed vertices.

    Unreachable pairs hold ``UNREACHABLE`` (-1).
    """

    __slots__ = ("n", "_rows")

    def __init__(self, rows: list[list[int]]):
        self.n = len(rows)
        self._rows = tuple(tuple(r) for r in rows)

    def __getitem__(self, key: tuple[int, int]) -> int:
        u, v = key
        return self._rows[u - 1][v - 1]

    def row(self, u: int) -> tuple[int, ...]:
        """Distances from u to v_1..v_n (0-indexed tuple)."""
        return self._rows[u - 1]

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def __eq__(self, other):
        return isinstance(other, DistanceMatrix) and self._rows == other._rows

    def __repr__(self):
        return f"DistanceMatrix(n={self.n})"


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Single-source hop distances from ``source`` as a 0-indexed list."""
    dist = [UNREACHABLE] * g.n
    dist[source - 1] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x - 1] + 1
        for y in g.adjacency[x - 1]:
            if dist[y - 1] == UNREACHABLE:
                dist[y - 1] = dx
                queue.append(y)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix([bfs_distances(g, s) for s in g.vertices])


def diameter(g: Graph) -> int:
    if not g.is_connected():
        raise NotConnectedError("diameter is undefined for a disconnected graph")
    return max((max(r) for r in g.distances.rows()), default=0)


def require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise NotConnectedError("graph is not connected")


# -- generators ----------------------------------------------------------------


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidOrderError(f"cycle order must be >= 3, got {n}")
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidOrderError(f"complete graph order must be >= 1, got {n}")
    return Graph.from_edges(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidOrderError(f"path order must be >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def regular_n2(n: int) -> Graph:
    """K_n minus the perfect matching {v_i v_(i+n/2)}."""
    if n < 4 or n % 2:
        raise InvalidOrderError(f"order must be even >= 4, got {n}")
    half = n // 2
    return Graph.from_edges(
        n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if j != i + half]
    )


def regular_n3(n: int) -> Graph:
    """K_n minus the Hamiltonian cycle v_1 v_2 ... v_n v_1."""
    if n < 5:
        raise InvalidOrderError(f"order must be >= 5, got {n}")
    return Graph.from_edges(
        n,
        [
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 2, n + 1)
            if not (i == 1 and j == n)
        ],
    )


# -- edge-list format ----------------------------------------------------------


def from_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` edge-line format.

    Blank lines and lines starting with '#' are ignored. Duplicate edges and
    self-loops are rejected rather than collapsed.
    """
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("negative vertex or edge count", lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (1 <= a <= n and 1 <= b <= n):
            raise ParseError(f"vertex id out of range 1..{n}", lineno)
        if a == b:
            raise ParseError(f"self-loop at vertex {a}", lineno)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ParseError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise ParseError("missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges but {len(edges)} were given")
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"

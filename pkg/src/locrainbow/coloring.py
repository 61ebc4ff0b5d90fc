"""Colorings, rainbow codes and the locating-rainbow predicates.

A coloring assigns each vertex v_1..v_n a color in 1..k. Its rainbow code at
v is the vector of hop distances from v to each color class. The coloring is
a locating rainbow coloring when every vertex pair is joined by a path whose
internal vertices carry pairwise distinct colors, and all codes differ.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidPairError, NotSurjectiveError
from .graph import Graph, require_connected

NONE = "none"
NOT_RAINBOW_CONNECTED = "not-rainbow-connected"
CODE_COLLISION = "code-collision"
NOT_SURJECTIVE = "not-surjective"


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]  # colors[i - 1] is the color of v_i
    k: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        for i, c in enumerate(self.colors, start=1):
            if not 1 <= c <= self.k:
                raise ValueError(f"color {c} of v_{i} is outside 1..{self.k}")

    @classmethod
    def of(cls, colors: Sequence[int], k: int | None = None) -> Coloring:
        """Build a coloring, taking k as the largest color when not given."""
        colors = tuple(colors)
        return cls(colors, max(colors) if k is None else k)

    @property
    def n(self) -> int:
        return len(self.colors)

    def __call__(self, v: int) -> int:
        return self.colors[v - 1]

    def unused_colors(self) -> list[int]:
        used = set(self.colors)
        return [i for i in range(1, self.k + 1) if i not in used]

    def is_surjective(self) -> bool:
        return len(set(self.colors)) == self.k

    def permuted(self, perm: Sequence[int]) -> Coloring:
        """Relabel color i as perm[i - 1]."""
        return Coloring(tuple(perm[c - 1] for c in self.colors), self.k)


@dataclass(frozen=True)
class ColorClasses:
    classes: tuple[frozenset[int], ...]  # classes[i - 1] = R_i

    @property
    def k(self) -> int:
        return len(self.classes)

    def __getitem__(self, i: int) -> frozenset[int]:
        return self.classes[i - 1]


@dataclass(frozen=True)
class CheckVerdict:
    """Outcome of a check.

    ``witness`` is a vertex pair for path and collision failures and a
    one-tuple holding the unused color for surjectivity failures.
    """

    ok: bool
    failure_kind: str = NONE
    witness: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.ok != (self.failure_kind == NONE):
            raise ValueError("ok must hold exactly when failure_kind is 'none'")
        if not self.ok and not self.witness:
            raise ValueError("a failing verdict needs a witness")

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "OK"
        w = ",".join(str(x) for x in self.witness)
        label = "color" if self.failure_kind == NOT_SURJECTIVE else "witness"
        return f"FAIL {self.failure_kind} {label} ({w})"


PASS = CheckVerdict(True)


def _check_size(g: Graph, c: Coloring) -> None:
    if c.n != g.n:
        raise ValueError(f"coloring has {c.n} entries for a graph on {g.n} vertices")


def color_classes(g: Graph, c: Coloring) -> ColorClasses:
    _check_size(g, c)
    buckets: list[set[int]] = [set() for _ in range(c.k)]
    for v, col in enumerate(c.colors, start=1):
        buckets[col - 1].add(v)
    for i, b in enumerate(buckets, start=1):
        if not b:
            raise NotSurjectiveError(i)
    return ColorClasses(tuple(frozenset(b) for b in buckets))


def rainbow_code(g: Graph, classes: ColorClasses, v: int) -> tuple[int, ...]:
    require_connected(g)
    row = g.distances.row(v)
    return tuple(min(row[y - 1] for y in cls) for cls in classes.classes)


def rainbow_codes(g: Graph, c: Coloring) -> list[tuple[int, ...]]:
    """Codes of v_1..v_n, in vertex order."""
    classes = color_classes(g, c)
    require_connected(g)
    return [rainbow_code(g, classes, v) for v in g.vertices]


# -- rainbow vertex paths ------------------------------------------------------


def _cycle_reachable(g: Graph, c: Coloring, u: int) -> set[int]:
    """Targets reachable from u by a rainbow vertex path on a cycle graph.

    Walks both directions around the cycle, stopping at the first repeated
    internal color.
    """
    reached = set()
    for first in g.neighbors(u):
        prev, x, seen = u, first, 0
        while x != u:
            reached.add(x)
            bit = 1 << c(x)
            if seen & bit:
                break
            seen |= bit
            prev, x = x, next(y for y in g.neighbors(x) if y != prev)
    return reached


def _reachable(g: Graph, c: Coloring, u: int) -> set[int]:
    """All v reachable from u by a rainbow vertex path.

    Search over (vertex, colors of internal vertices traversed so far). A walk
    with distinct internal colors never repeats an internal vertex, and any
    such walk shortcuts to a rainbow path.
    """
    if g.is_cycle():
        return _cycle_reachable(g, c, u)
    reached = {u}
    seen_states = set()
    queue = deque()
    for y in g.neighbors(u):
        reached.add(y)
        if (y, 0) not in seen_states:
            seen_states.add((y, 0))
            queue.append((y, 0))
    while queue:
        x, used = queue.popleft()
        if x == u:
            continue
        bit = 1 << c(x)
        if used & bit:
            continue
        nxt = used | bit
        for y in g.neighbors(x):
            reached.add(y)
            state = (y, nxt)
            if state not in seen_states:
                seen_states.add(state)
                queue.append(state)
    reached.discard(u)
    return reached


def has_rainbow_vertex_path(g: Graph, c: Coloring, u: int, v: int) -> bool:
    if u == v:
        raise InvalidPairError(f"endpoints must differ, got u = v = {u}")
    if not (1 <= u <= g.n and 1 <= v <= g.n):
        raise InvalidPairError(f"vertex out of range 1..{g.n}")
    _check_size(g, c)
    require_connected(g)
    if g.has_edge(u, v):
        return True
    return v in _reachable(g, c, u)


def failing_pairs(g: Graph, c: Coloring) -> list[tuple[int, int]]:
    """Every pair u < v with no rainbow vertex path, ordered farthest first."""
    _check_size(g, c)
    require_connected(g)
    d = g.distances
    bad = []
    for u in g.vertices:
        far = [v for v in range(u + 1, g.n + 1) if d[u, v] >= 3]
        if not far:
            continue
        reach = _reachable(g, c, u)
        bad.extend((u, v) for v in far if v not in reach)
    bad.sort(key=lambda p: (-d[p], p))
    return bad


def is_rainbow_vertex_connected(g: Graph, c: Coloring) -> CheckVerdict:
    _check_size(g, c)
    require_connected(g)
    # pairs at distance <= 2 always have a path with at most one internal vertex
    if max(max(r) for r in g.distances.rows()) <= 2:
        return PASS
    bad = failing_pairs(g, c)
    if bad:
        return CheckVerdict(False, NOT_RAINBOW_CONNECTED, bad[0])
    return PASS


def is_locating(g: Graph, c: Coloring) -> CheckVerdict:
    codes = rainbow_codes(g, c)
    first_seen: dict[tuple[int, ...], int] = {}
    best = None
    for v, code in enumerate(codes, start=1):
        u = first_seen.setdefault(code, v)
        if u != v and (best is None or (u, v) < best):
            best = (u, v)
    if best is not None:
        return CheckVerdict(False, CODE_COLLISION, best)
    return PASS


def check_locating_rainbow(g: Graph, c: Coloring) -> CheckVerdict:
    """Surjectivity, then rainbow connectivity, then distinct codes."""
    _check_size(g, c)
    require_connected(g)
    unused = c.unused_colors()
    if unused:
        return CheckVerdict(False, NOT_SURJECTIVE, (unused[0],))
    verdict = is_rainbow_vertex_connected(g, c)
    if not verdict:
        return verdict
    return is_locating(g, c)

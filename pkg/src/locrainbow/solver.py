"""Exact rvcl / rvc by iterative deepening on k with depth-first search.

Vertices are colored in index order and colors are introduced canonically
(v may take a new color j only once 1..j-1 have appeared earlier), which
removes the k! color relabelings. Within one k the search prunes on:

* surjectivity: too few vertices left to introduce the missing colors;
* twins: vertices with identical distances to everything else never share
  a color in a locating coloring;
* class size: in (n,t)-regular graphs of diameter 2, t in {2,3}, a color
  class can hold at most ``max_class_size(k, t)`` vertices;
* final codes: once every entry of a vertex's code can no longer change
  (no uncolored vertex is closer than the current class distance), two equal
  final codes are a dead end;
* rainbow paths: for every pair at distance >= 3 we keep the inclusion-
  minimal interiors of its simple paths with at most k internal vertices; a
  pair dies when all of them carry a repeated color among colored vertices.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field
from itertools import combinations

from .coloring import Coloring, check_locating_rainbow, is_rainbow_vertex_connected
from .errors import BudgetExceededError
from .formulas import diameter_bound_max_n, max_class_size
from .graph import Graph, diameter, require_connected

log = logging.getLogger(__name__)

CYCLE_LEMMA = "cycle-lemma"
TWIN_CLASS = "twin-class"
DIAMETER_BOUND = "diameter-bound"
RVC = "rvc"
TRIVIAL = "trivial"

INF = 1 << 30
MAX_PATHS = 200_000


@dataclass
class SolveOptions:
    node_budget: int | None = None
    parallel: bool = False
    k_max: int | None = None
    workers: int | None = None
    # prefix depth for splitting the tree across workers
    split_depth: int = 5

    def __post_init__(self):
        for name in ("node_budget", "k_max", "workers"):
            val = getattr(self, name)
            if val is not None and val < 1:
                raise ValueError(f"{name} must be positive, got {val}")


@dataclass
class SolveReport:
    value: int
    certificate: Coloring
    lower_bound: int
    lower_bound_source: str
    nodes: int
    elapsed: float  # seconds
    mode: str = "rvcl"
    per_k_nodes: dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "lower_bound": self.lower_bound,
            "lower_bound_source": self.lower_bound_source,
            "nodes": self.nodes,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }


# -- lower bounds ----------------------------------------------------------------


def twin_classes(g: Graph) -> list[list[int]]:
    """Groups of mutual twins: d(u,x) = d(v,x) for every x other than u, v."""
    rows = g.distances.rows()

    def twins(u, v):
        ru, rv = rows[u - 1], rows[v - 1]
        return all(ru[x] == rv[x] for x in range(g.n) if x != u - 1 and x != v - 1)

    classes: list[list[int]] = []
    for v in g.vertices:
        for cls in classes:
            if all(twins(u, v) for u in cls):
                cls.append(v)
                break
        else:
            classes.append([v])
    return classes


def diameter_lower_bound(n: int, diam: int) -> int:
    """Least r with n <= r * diam^(r-1)."""
    r = 1
    while diameter_bound_max_n(r, diam) < n:
        r += 1
    return r


def lower_bound(g: Graph) -> tuple[int, str]:
    """Best of the cycle bound (any cycle needs three colors), the twin-class
    bound and the diameter bound.

    Ties go to the earlier source in that order.
    """
    require_connected(g)
    best = (1, TRIVIAL)
    if g.n < 2:
        return best
    candidates = []
    if g.n >= 3 and g.m >= g.n:
        candidates.append((3, CYCLE_LEMMA))
    candidates.append((max(len(c) for c in twin_classes(g)), TWIN_CLASS))
    if g.n >= 3:
        candidates.append((diameter_lower_bound(g.n, diameter(g)), DIAMETER_BOUND))
    for val, src in candidates:
        if val > best[0]:
            best = (val, src)
    return best


def regular_t(g: Graph) -> int | None:
    """t such that g is (n-t)-regular with diameter 2 and t in {2, 3}."""
    degs = {len(a) for a in g.adjacency}
    if len(degs) != 1 or g.n < 4:
        return None
    t = g.n - degs.pop()
    if t in (2, 3) and g.is_connected() and diameter(g) == 2:
        return t
    return None


# -- path systems --------------------------------------------------------------


def _minimal_interiors(adj: list[list[int]], u: int, v: int, max_len: int, limit: int) -> list[int] | None:
    """Inclusion-minimal interior vertex sets (bitmasks) of simple u-v paths
    with at most ``max_len`` internal vertices. None if more than ``limit``
    paths were enumerated."""
    found: set[int] = set()
    count = 0
    stack = [(u, 1 << u, 0, 0)]
    while stack:
        x, visited, interior, length = stack.pop()
        for y in adj[x]:
            if y == v:
                found.add(interior)
                count += 1
                if count > limit:
                    return None
            elif not visited >> y & 1 and length < max_len:
                stack.append((y, visited | 1 << y, interior | 1 << y, length + 1))
    kept: list[int] = []
    for m in sorted(found, key=lambda m: bin(m).count("1")):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


class _Search:
    """Depth-first search for a coloring with exactly k colors."""

    def __init__(self, g: Graph, k: int, locating: bool, budget: int | None):
        self.g = g
        self.n = n = g.n
        self.k = k
        self.locating = locating
        self.budget = budget
        self.nodes = 0
        self.adj = [sorted(y - 1 for y in g.neighbors(v)) for v in g.vertices]
        self.dist = [list(r) for r in g.distances.rows()]
        d = self.dist

        self.twins_before: list[list[int]] = [[] for _ in range(n)]
        self.cap = None
        if locating:
            for cls in twin_classes(g):
                for a, b in combinations(sorted(cls), 2):
                    self.twins_before[b - 1].append(a - 1)
            t = regular_t(g)
            if t is not None and k >= 3:
                self.cap = max_class_size(k, t)

        # nearest vertex colored after position x, as seen from each v
        self.first_uncolored = fu = [[INF] * n for _ in range(n)]
        for x in range(n - 2, -1, -1):
            row, nxt = fu[x], fu[x + 1]
            for v in range(n):
                row[v] = min(nxt[v], d[v][x + 1])

        self.infeasible = False
        self.exact_paths = True
        self.path_pair: list[int] = []
        self.paths_with: list[list[int]] = [[] for _ in range(n)]
        self.pair_alive: list[int] = []
        self._build_paths()

        self.colors = [-1] * n
        self.count = [0] * k
        self.used = 0
        self.hi = [[INF] * k for _ in range(n)]
        self.final = [False] * n
        self.codes: set[tuple[int, ...]] = set()
        self.pmask = [0] * len(self.path_pair)
        self.pdead = [False] * len(self.path_pair)
        self.trail: list[tuple] = []

    def _build_paths(self):
        n, d = self.n, self.dist
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if d[u][v] >= 3]
        total = 0
        systems = []
        for u, v in pairs:
            interiors = _minimal_interiors(self.adj, u, v, self.k, MAX_PATHS)
            if interiors is None or total + len(interiors) > MAX_PATHS:
                self.exact_paths = False
                self.path_pair, self.paths_with, self.pair_alive = [], [[] for _ in range(n)], []
                return
            if not interiors:
                # every u-v path needs more than k distinct internal colors
                self.infeasible = True
            total += len(interiors)
            systems.append(interiors)
        for pair_id, interiors in enumerate(systems):
            self.pair_alive.append(len(interiors))
            for m in interiors:
                pid = len(self.path_pair)
                self.path_pair.append(pair_id)
                for x in range(n):
                    if m >> x & 1:
                        self.paths_with[x].append(pid)

    # -- assignment with undo trail --

    def _assign(self, x: int, c: int) -> bool:
        trail = self.trail
        self.colors[x] = c
        self.count[c] += 1
        if c == self.used:
            self.used += 1
        trail.append((0, x, c))

        bit = 1 << c
        pmask, pdead, alive, ppair = self.pmask, self.pdead, self.pair_alive, self.path_pair
        for pid in self.paths_with[x]:
            if pdead[pid]:
                continue
            m = pmask[pid]
            if m & bit:
                pdead[pid] = True
                pair = ppair[pid]
                alive[pair] -= 1
                trail.append((1, pid, pair))
                if not alive[pair]:
                    return False
            else:
                pmask[pid] = m | bit
                trail.append((2, pid, m))

        if self.locating:
            hi, d = self.hi, self.dist
            for v in range(self.n):
                dv = d[v][x]
                row = hi[v]
                if dv < row[c]:
                    trail.append((3, v, row[c], c))
                    row[c] = dv
            fu = self.first_uncolored[x]
            final, codes = self.final, self.codes
            for v in range(self.n):
                if not final[v]:
                    row = hi[v]
                    if max(row) <= fu[v]:
                        code = tuple(row)
                        if code in codes:
                            return False
                        codes.add(code)
                        final[v] = True
                        trail.append((4, v, code))
        return True

    def _undo(self, mark: int):
        trail = self.trail
        while len(trail) > mark:
            kind, a, b, *rest = trail.pop()
            if kind == 0:
                self.colors[a] = -1
                self.count[b] -= 1
                if self.count[b] == 0 and b == self.used - 1:
                    self.used -= 1
            elif kind == 1:
                self.pdead[a] = False
                self.pair_alive[b] += 1
            elif kind == 2:
                self.pmask[a] = b
            elif kind == 3:
                self.hi[a][rest[0]] = b
            else:
                self.final[a] = False
                self.codes.discard(b)

    def _choices(self, x: int) -> list[int]:
        remaining = self.n - x
        missing = self.k - self.used
        if missing > remaining:
            return []
        if missing == remaining:
            cands = [self.used]
        else:
            cands = list(range(min(self.used + 1, self.k)))
        if self.locating:
            banned = {self.colors[t] for t in self.twins_before[x]}
            if banned:
                cands = [c for c in cands if c not in banned]
        if self.cap is not None:
            cands = [c for c in cands if self.count[c] < self.cap]
        return cands

    def _leaf_ok(self) -> bool:
        if self.exact_paths:
            return True
        return bool(is_rainbow_vertex_connected(self.g, self.coloring()))

    def _dfs(self, x: int) -> bool:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _OutOfNodes
        if x == self.n:
            return self._leaf_ok()
        for c in self._choices(x):
            mark = len(self.trail)
            if self._assign(x, c) and self._dfs(x + 1):
                return True
            self._undo(mark)
        return False

    def coloring(self) -> Coloring:
        return Coloring(tuple(c + 1 for c in self.colors), self.k)

    def apply_prefix(self, prefix: tuple[int, ...]) -> bool:
        for x, c in enumerate(prefix):
            if c not in self._choices(x):
                return False
            if not self._assign(x, c):
                return False
        return True

    def run(self, prefix: tuple[int, ...] = ()) -> Coloring | None:
        if self.infeasible:
            return None
        if not self.apply_prefix(prefix):
            return None
        if self._dfs(len(prefix)):
            return self.coloring()
        return None

    def prefixes(self, depth: int) -> list[tuple[int, ...]]:
        """Canonical partial colorings of v_1..v_depth surviving the prunes."""
        out: list[tuple[int, ...]] = []
        if self.infeasible:
            return out

        def rec(x):
            if x == depth:
                out.append(tuple(self.colors[:depth]))
                return
            for c in self._choices(x):
                mark = len(self.trail)
                if self._assign(x, c):
                    rec(x + 1)
                self._undo(mark)

        rec(0)
        return out


class _OutOfNodes(Exception):
    pass


# -- drivers -------------------------------------------------------------------


def _run_prefix(g: Graph, k: int, locating: bool, budget: int | None, prefix: tuple[int, ...]):
    s = _Search(g, k, locating, budget)
    try:
        found = s.run(prefix)
    except _OutOfNodes:
        return None, s.nodes, True
    return (found.colors if found else None), s.nodes, False


def find_coloring(
    g: Graph,
    k: int,
    *,
    locating: bool = True,
    budget: int | None = None,
    parallel: bool = False,
    workers: int | None = None,
    split_depth: int = 5,
) -> tuple[Coloring | None, int]:
    """First coloring with exactly k colors found by the search, and the node count.

    Raises _OutOfNodes(nodes) once the node budget runs out.
    """
    if not parallel:
        s = _Search(g, k, locating, budget)
        try:
            return s.run(), s.nodes
        except _OutOfNodes:
            raise _OutOfNodes(s.nodes) from None

    head = _Search(g, k, locating, None)
    prefixes = head.prefixes(min(split_depth, g.n))
    nodes = 0
    with ProcessPoolExecutor(max_workers=workers) as pool:
        pending = {pool.submit(_run_prefix, g, k, locating, budget, p) for p in prefixes}
        try:
            while pending:
                done, pending = wait(pending, return_when=FIRST_COMPLETED)
                for fut in done:
                    colors, used_nodes, out = fut.result()
                    nodes += used_nodes
                    if out or (budget is not None and nodes > budget):
                        raise _OutOfNodes(nodes)
                    if colors is not None:
                        return Coloring(colors, k), nodes
        finally:
            for fut in pending:
                fut.cancel()
    return None, nodes


def _deepen(g: Graph, opts: SolveOptions, start: int, lb: tuple[int, str], locating: bool, mode: str) -> SolveReport:
    t0 = time.perf_counter()
    k_max = opts.k_max if opts.k_max is not None else g.n
    total = 0
    per_k: dict[int, int] = {}
    for k in range(start, k_max + 1):
        remaining = None if opts.node_budget is None else opts.node_budget - total
        try:
            found, nodes = find_coloring(
                g,
                k,
                locating=locating,
                budget=remaining,
                parallel=opts.parallel,
                workers=opts.workers,
                split_depth=opts.split_depth,
            )
        except _OutOfNodes as exc:
            used = exc.args[0] if exc.args else 0
            raise BudgetExceededError(
                f"node budget {opts.node_budget} exhausted at k={k}", lower=k, upper=None, nodes=total + used
            ) from None
        total += nodes
        per_k[k] = nodes
        log.debug("%s k=%d: %s after %d nodes", mode, k, "found" if found else "infeasible", nodes)
        if found is not None:
            return SolveReport(k, found, lb[0], lb[1], total, time.perf_counter() - t0, mode, per_k)
    raise BudgetExceededError(f"no {mode} coloring with at most {k_max} colors", lower=k_max + 1, upper=None, nodes=total)


def solve_rvcl(g: Graph, opts: SolveOptions | None = None) -> SolveReport:
    """Least k admitting a locating rainbow k-coloring, with a certificate."""
    opts = opts or SolveOptions()
    require_connected(g)
    if g.n < 2:
        raise ValueError("rvcl needs at least two vertices")
    lb = lower_bound(g)
    return _deepen(g, opts, lb[0], lb, True, "rvcl")


def solve_rvc(g: Graph, opts: SolveOptions | None = None) -> SolveReport:
    """Least k admitting a rainbow vertex k-coloring.

    Graphs of diameter 1 never need an internal vertex and get value 0; the
    certificate is then the one-color coloring. Otherwise the search starts
    at diam - 1, since a diametral pair needs that many distinct internal
    colors.
    """
    opts = opts or SolveOptions()
    require_connected(g)
    if g.n < 2:
        raise ValueError("rvc needs at least two vertices")
    diam = diameter(g)
    if diam <= 1:
        return SolveReport(0, Coloring((1,) * g.n, 1), 0, RVC, 0, 0.0, "rvc")
    lb = (diam - 1, RVC)
    return _deepen(g, opts, max(lb[0], 1), lb, False, "rvc")


def _restricted_growth(n: int, k: int):
    """Every canonical coloring of n vertices using exactly colors 1..k."""
    colors = [0] * n

    def rec(i, used):
        if n - i < k - used:
            return
        if i == n:
            if used == k:
                yield tuple(colors)
            return
        for c in range(1, min(used + 1, k) + 1):
            colors[i] = c
            yield from rec(i + 1, max(used, c))

    yield from rec(0, 0)


def brute_force_rvcl(g: Graph, k_max: int) -> SolveReport:
    """Exhaustive oracle: checks every canonical surjective coloring for
    k = 1, 2, ... with the plain checker, no pruning."""
    require_connected(g)
    t0 = time.perf_counter()
    nodes = 0
    for k in range(1, k_max + 1):
        for colors in _restricted_growth(g.n, k):
            nodes += 1
            c = Coloring(colors, k)
            if check_locating_rainbow(g, c):
                return SolveReport(k, c, 1, TRIVIAL, nodes, time.perf_counter() - t0, "brute-force")
    raise BudgetExceededError(f"no locating coloring with at most {k_max} colors", lower=k_max + 1, upper=None, nodes=nodes)

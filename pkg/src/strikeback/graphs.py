"""Small simple undirected graphs and the exact invariants the solvers need.

Vertices are dense integers 0..n-1.  Graphs are immutable after
construction, so they can be shared freely between concurrent solves.
Everything here is exact and sized for desk-scale instances (n up to a
few dozen); there are no approximations.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

INFINITE = math.inf


class GraphError(ValueError):
    """Invalid graph construction (bad vertex, loop edge, bad parameters)."""


class ParseError(GraphError):
    """Malformed graph6 / edge-list / hypergraph text input."""


class SizeLimitError(GraphError):
    """Instance exceeds a documented exhaustive-search size limit."""


class Graph:
    """Finite simple undirected graph with constant-time adjacency tests.

    Neighbour sets are kept both as sorted tuples (deterministic
    iteration) and as bitmasks (O(1) membership, fast set algebra in the
    exhaustive searches below).
    """

    __slots__ = ("n", "_nbrs", "_masks")

    def __init__(self, n: int, nbrs: tuple[tuple[int, ...], ...], masks: tuple[int, ...]):
        # Internal constructor; use from_edge_list() or a generator.
        self.n = n
        self._nbrs = nbrs
        self._masks = masks

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def mask(self, v: int) -> int:
        """Bitmask of the open neighbourhood of v."""
        return self._masks[v]

    def closed_mask(self, v: int) -> int:
        return self._masks[v] | (1 << v)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self._nbrs[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(t) for t in self._nbrs) // 2

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self.n, self._masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _build(n: int, adj_sets: Sequence[set[int]]) -> Graph:
    nbrs = tuple(tuple(sorted(s)) for s in adj_sets)
    masks = tuple(sum(1 << u for u in s) for s in adj_sets)
    return Graph(n, nbrs, masks)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an explicit edge list; duplicate edges collapse."""
    if n < 1:
        raise GraphError(f"need at least one vertex, got n={n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return _build(n, adj)


def from_masks(n: int, masks: Sequence[int]) -> Graph:
    """Build a graph from open-neighbourhood bitmasks (trusted input)."""
    adj = [{v for v in range(n) if masks[u] >> v & 1} for u in range(n)]
    return _build(n, adj)


def from_edge_mask(n: int, emask: int) -> Graph:
    """Decode an edge-subset bitmask over pairs (u,v), u<v, in lex order."""
    adj: list[set[int]] = [set() for _ in range(n)]
    i = 0
    for u in range(n):
        for v in range(u + 1, n):
            if emask >> i & 1:
                adj[u].add(v)
                adj[v].add(u)
            i += 1
    return _build(n, adj)


# ---------------------------------------------------------------------------
# graph6 interchange format (single-byte size header, n <= 62)

def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise GraphError(f"graph6 single-byte header supports n <= 62, got {g.n}")
    bits = []
    for col in range(1, g.n):
        for row in range(col):
            bits.append(1 if g.adjacent(row, col) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + g.n)]
    for i in range(0, len(bits), 6):
        group = 0
        for b in bits[i : i + 6]:
            group = group << 1 | b
        out.append(chr(63 + group))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Parse a graph6 string (optionally prefixed with '>>graph6<<')."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ParseError("empty graph6 string")
    head = ord(s[0])
    if head == 126:
        raise ParseError("truncated or oversized graph6 header (n > 62 unsupported)")
    if not 63 <= head <= 125:
        raise ParseError(f"bad graph6 size byte {s[0]!r}")
    n = head - 63
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    body = s[1:]
    if len(body) != nbytes:
        raise ParseError(f"graph6 body for n={n} needs {nbytes} bytes, got {len(body)}")
    bits: list[int] = []
    for ch in body:
        code = ord(ch)
        if not 63 <= code <= 126:
            raise ParseError(f"graph6 byte {ch!r} outside printable range 63..126")
        group = code - 63
        bits.extend(group >> shift & 1 for shift in range(5, -1, -1))
    edges = []
    i = 0
    for col in range(1, n):
        for row in range(col):
            if bits[i]:
                edges.append((row, col))
            i += 1
    return from_edge_list(n, edges)


# ---------------------------------------------------------------------------
# edge-list text format: first line "n m", then m lines "u v"

def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list_text(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ParseError("empty edge-list text")
    try:
        n, m = map(int, lines[0].split())
    except ValueError as exc:
        raise ParseError(f"bad edge-list header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise ParseError(f"edge-list header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        try:
            u, v = map(int, ln.split())
        except ValueError as exc:
            raise ParseError(f"bad edge line {ln!r}") from exc
        edges.append((u, v))
    return from_edge_list(n, edges)


# ---------------------------------------------------------------------------
# distances and basic invariants

def distances_from(g: Graph, src: int) -> list[int]:
    """BFS distances from src; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def is_connected(g: Graph) -> bool:
    return g.n == 1 or min(distances_from(g, 0)) >= 0


def min_degree(g: Graph) -> int:
    return min(g.degree(v) for v in range(g.n))


def diameter(g: Graph) -> float:
    """Exact diameter; INFINITE when disconnected."""
    best = 0
    for v in range(g.n):
        dist = distances_from(g, v)
        if min(dist) < 0:
            return INFINITE
        best = max(best, max(dist))
    return best


def bipartition(g: Graph) -> Optional[tuple[int, ...]]:
    """Two-colouring (vertex -> side) when bipartite, else None.

    Component roots (smallest vertex per component) are coloured 0, so
    the output is deterministic.
    """
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if side[v] < 0:
                    side[v] = 1 - side[u]
                    queue.append(v)
                elif side[v] == side[u]:
                    return None
    return tuple(side)


@dataclass(frozen=True)
class BasicInvariants:
    min_degree: int
    diameter: float
    is_connected: bool
    bipartition: Optional[tuple[int, ...]]


def invariants_basic(g: Graph) -> BasicInvariants:
    return BasicInvariants(
        min_degree=min_degree(g),
        diameter=diameter(g),
        is_connected=is_connected(g),
        bipartition=bipartition(g),
    )


def girth(g: Graph) -> float:
    """Length of the shortest cycle; INFINITE for forests.

    For each edge (u,v), the shortest cycle through that edge is one
    plus the u-v distance with the edge removed; the minimum over all
    edges is exact.
    """
    best = INFINITE
    for u, v in g.edges():
        dist = [-1] * g.n
        dist[u] = 0
        queue = deque([u])
        while queue:
            w = queue.popleft()
            if dist[w] + 1 >= best:
                break
            for x in g.neighbors(w):
                if (w, x) == (u, v):
                    continue
                if dist[x] < 0:
                    dist[x] = dist[w] + 1
                    queue.append(x)
        if dist[v] >= 0:
            best = min(best, dist[v] + 1)
    return best


def has_universal_vertex(g: Graph) -> bool:
    full = (1 << g.n) - 1
    return any(g.closed_mask(v) == full for v in range(g.n))


# ---------------------------------------------------------------------------
# domination number (exact, exhaustive with pruning)

DOMINATION_LIMIT = 32


def _greedy_dominating_set(g: Graph, full: int) -> list[int]:
    covered = 0
    chosen = []
    while covered != full:
        best_v, best_gain = -1, -1
        for v in range(g.n):
            gain = bin(g.closed_mask(v) & ~covered).count("1")
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen.append(best_v)
        covered |= g.closed_mask(best_v)
    return chosen


def domination_number(g: Graph) -> tuple[int, frozenset[int]]:
    """Exact domination number with a witness set.

    Branch and bound: always branch on a least-covered undominated
    vertex (any dominating set must pick from its closed
    neighbourhood), seeded with a greedy upper bound.  Documented limit
    n <= 32.
    """
    if g.n > DOMINATION_LIMIT:
        raise SizeLimitError(f"domination_number limited to n <= {DOMINATION_LIMIT}, got {g.n}")
    full = (1 << g.n) - 1
    closed = [g.closed_mask(v) for v in range(g.n)]

    greedy = _greedy_dominating_set(g, full)
    best_size = len(greedy)
    best_set = list(greedy)

    max_cover = max(bin(c).count("1") for c in closed)

    def dfs(covered: int, chosen: list[int]) -> None:
        nonlocal best_size, best_set
        if covered == full:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_set = list(chosen)
            return
        uncovered = bin(full & ~covered).count("1")
        if len(chosen) + (uncovered + max_cover - 1) // max_cover >= best_size:
            return
        # branch on the lowest-index undominated vertex
        rem = full & ~covered
        v = (rem & -rem).bit_length() - 1
        cand = [w for w in range(g.n) if closed[v] >> w & 1]
        cand.sort(key=lambda w: -bin(closed[w] & ~covered).count("1"))
        for w in cand:
            chosen.append(w)
            dfs(covered | closed[w], chosen)
            chosen.pop()

    dfs(0, [])
    return best_size, frozenset(best_set)


# ---------------------------------------------------------------------------
# K_{1,m}-freeness

def _has_independent_m_subset(g: Graph, verts: Sequence[int], m: int) -> bool:
    # DFS over candidates in ascending order; cheap since m stays small.
    def extend(chosen_mask: int, start: int, need: int) -> bool:
        if need == 0:
            return True
        for i in range(start, len(verts) - need + 1):
            v = verts[i]
            if g.mask(v) & chosen_mask:
                continue
            if extend(chosen_mask | 1 << v, i + 1, need - 1):
                return True
        return False

    return extend(0, 0, m)


def is_k1m_free(g: Graph, m: int) -> bool:
    """True iff no vertex has m pairwise non-adjacent neighbours."""
    if m < 2:
        raise GraphError(f"K_1m-freeness needs m >= 2, got {m}")
    for v in range(g.n):
        nb = g.neighbors(v)
        if len(nb) >= m and _has_independent_m_subset(g, nb, m):
            return False
    return True


def least_k1m_free_m(g: Graph, lo: int = 3) -> int:
    """Smallest m >= lo with no induced K_{1,m}; at most max degree + 1."""
    m = lo
    while not is_k1m_free(g, m):
        m += 1
    return m


# ---------------------------------------------------------------------------
# isometric paths

def isometric_shortest_path(g: Graph, u: int, v: int) -> tuple[int, ...]:
    """One shortest u-v path (deterministic: smallest parents win)."""
    dist = distances_from(g, u)
    if dist[v] < 0:
        raise GraphError(f"vertices {u} and {v} are not connected")
    path = [v]
    cur = v
    while cur != u:
        cur = min(w for w in g.neighbors(cur) if dist[w] == dist[cur] - 1)
        path.append(cur)
    path.reverse()
    return tuple(path)


def is_isometric(g: Graph, path: Sequence[int]) -> bool:
    """Check that a vertex sequence is a path realizing graph distances."""
    if len(set(path)) != len(path) or not path:
        return False
    for a, b in zip(path, path[1:]):
        if not g.adjacent(a, b):
            return False
    for i, a in enumerate(path):
        dist = distances_from(g, a)
        for j in range(i + 1, len(path)):
            if dist[path[j]] != j - i:
                return False
    return True

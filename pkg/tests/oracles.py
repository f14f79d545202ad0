"""Independent brute-force oracles used across the tests.

These deliberately re-derive quantities from definitions, by routes
different from the library implementations, so a shared bug cannot hide.
"""

from __future__ import annotations

from itertools import combinations

from strikeback.graphs import INFINITE, Graph
from strikeback.hypergraphs import Hypergraph


def brute_girth(g: Graph) -> float:
    """Shortest cycle by exhaustive DFS over cycles rooted at their
    minimum vertex."""
    best = INFINITE

    def dfs(start: int, v: int, visited: set[int], depth: int) -> None:
        nonlocal best
        if depth + 1 >= best:
            return
        for w in g.neighbors(v):
            if w == start and depth >= 2:
                best = min(best, depth + 1)
            elif w > start and w not in visited:
                visited.add(w)
                dfs(start, w, visited, depth + 1)
                visited.remove(w)

    for s in range(g.n):
        dfs(s, s, {s}, 0)
    return best


def brute_domination(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Smallest dominating set by increasing-size subset enumeration."""
    for size in range(1, g.n + 1):
        for cand in combinations(range(g.n), size):
            covered = set()
            for v in cand:
                covered.add(v)
                covered.update(g.neighbors(v))
            if len(covered) == g.n:
                return size, cand
    raise AssertionError("unreachable: V dominates itself")


def brute_all_pairs(g: Graph) -> list[list[float]]:
    """Floyd-Warshall distances, independent of the BFS routines."""
    dist = [[0 if i == j else INFINITE for j in range(g.n)] for i in range(g.n)]
    for u, v in g.edges():
        dist[u][v] = dist[v][u] = 1
    for m in range(g.n):
        for i in range(g.n):
            dm = dist[i][m]
            if dm == INFINITE:
                continue
            for j in range(g.n):
                alt = dm + dist[m][j]
                if alt < dist[i][j]:
                    dist[i][j] = alt
    return dist


def brute_berge_girth(h: Hypergraph) -> float:
    """Shortest Berge cycle straight from the definition: t >= 2
    distinct vertices and t distinct hyperedges, consecutive vertex
    pairs inside the matching hyperedge."""
    best = INFINITE

    def dfs(start: int, cur: int, used_edges: int, used_vertices: set[int], t: int) -> None:
        nonlocal best
        if t + 1 >= best:
            return
        for ei, e in enumerate(h.edges):
            if used_edges >> ei & 1 or cur not in e:
                continue
            for w in e:
                if w == cur:
                    continue
                if w == start:
                    if t + 1 >= 2:
                        best = min(best, t + 1)
                elif w > start and w not in used_vertices:
                    used_vertices.add(w)
                    dfs(start, w, used_edges | 1 << ei, used_vertices, t + 1)
                    used_vertices.remove(w)

    for s in range(h.n):
        dfs(s, s, 0, {s}, 0)
    return best


def decode_graph6_bitwise(text: str) -> tuple[int, set[tuple[int, int]]]:
    """Minimal independent graph6 decoder: size byte, then upper
    triangle bits column by column, 6 bits per printable byte."""
    data = [ord(ch) - 63 for ch in text]
    n = data[0]
    stream = []
    for group in data[1:]:
        stream.extend((group >> s) & 1 for s in (5, 4, 3, 2, 1, 0))
    edges = set()
    pos = 0
    for col in range(1, n):
        for row in range(col):
            if stream[pos]:
                edges.add((row, col))
            pos += 1
    return n, edges

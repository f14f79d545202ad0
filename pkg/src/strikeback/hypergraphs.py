"""Hypergraphs, their Berge girth, and line graphs.

A Berge cycle of length t >= 2 is an alternating sequence of t distinct
vertices and t distinct hyperedges v1 e1 v2 e2 ... vt et with
{vi, vi+1} contained in ei (indices cyclic).  Berge girth coincides
with ordinary girth on 2-uniform hypergraphs, and a length-2 Berge
cycle is exactly a pair of hyperedges sharing two vertices, so
linearity is the same thing as Berge girth >= 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graphs import (
    INFINITE,
    Graph,
    GraphError,
    ParseError,
    from_edge_list,
    girth,
)


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[frozenset[int], ...]


def make_hypergraph(n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    if n < 1:
        raise GraphError(f"hypergraph needs n >= 1, got {n}")
    out: list[frozenset[int]] = []
    seen: set[frozenset[int]] = set()
    for e in edges:
        fe = frozenset(e)
        if len(fe) < 2:
            raise GraphError(f"hyperedge {sorted(fe)} has fewer than 2 vertices")
        if any(not 0 <= v < n for v in fe):
            raise GraphError(f"hyperedge {sorted(fe)} out of range for n={n}")
        if fe in seen:
            raise GraphError(f"duplicate hyperedge {sorted(fe)}")
        seen.add(fe)
        out.append(fe)
    return Hypergraph(n, tuple(out))


def from_graph(g: Graph) -> Hypergraph:
    """View a simple graph as a 2-uniform hypergraph (edges in lex order)."""
    return make_hypergraph(g.n, [set(e) for e in g.edges()])


def incidence_graph(h: Hypergraph) -> Graph:
    """Bipartite vertex/hyperedge incidence graph; hyperedge i becomes
    vertex n + i."""
    edges = [
        (v, h.n + i)
        for i, e in enumerate(h.edges)
        for v in sorted(e)
    ]
    return from_edge_list(h.n + len(h.edges), edges)


def berge_girth(h: Hypergraph) -> float:
    """Length of the shortest Berge cycle, INFINITE if none.

    A Berge cycle of length t corresponds exactly to a cycle of length
    2t in the incidence graph, so this reduces to an ordinary girth
    computation.
    """
    if not h.edges:
        return INFINITE
    g = girth(incidence_graph(h))
    return INFINITE if g == INFINITE else int(g) // 2


def is_linear(h: Hypergraph) -> bool:
    """No two hyperedges share more than one vertex."""
    for i in range(len(h.edges)):
        for j in range(i + 1, len(h.edges)):
            if len(h.edges[i] & h.edges[j]) >= 2:
                return False
    return True


@dataclass(frozen=True)
class HyperProperties:
    uniform_k: Optional[int]
    is_linear: bool
    min_vertex_degree: int
    berge_girth: float


def hyper_properties(h: Hypergraph) -> HyperProperties:
    sizes = {len(e) for e in h.edges}
    uniform_k = sizes.pop() if len(sizes) == 1 else None
    degree = [0] * h.n
    for e in h.edges:
        for v in e:
            degree[v] += 1
    return HyperProperties(
        uniform_k=uniform_k,
        is_linear=is_linear(h),
        min_vertex_degree=min(degree),
        berge_girth=berge_girth(h),
    )


def line_graph(h: Hypergraph) -> Graph:
    """One vertex per hyperedge, adjacency = nonempty intersection."""
    m = len(h.edges)
    if m == 0:
        raise GraphError("line graph of a hypergraph with no hyperedges")
    edges = [
        (i, j)
        for i in range(m)
        for j in range(i + 1, m)
        if h.edges[i] & h.edges[j]
    ]
    return from_edge_list(m, edges)


# ---------------------------------------------------------------------------
# text format: first line "n m", then one line per hyperedge

def to_hypergraph_text(h: Hypergraph) -> str:
    lines = [f"{h.n} {len(h.edges)}"]
    lines.extend(" ".join(map(str, sorted(e))) for e in h.edges)
    return "\n".join(lines) + "\n"


def parse_hypergraph_text(text: str) -> Hypergraph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ParseError("empty hypergraph text")
    try:
        n, m = map(int, lines[0].split())
    except ValueError as exc:
        raise ParseError(f"bad hypergraph header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise ParseError(f"hypergraph header promises {m} hyperedges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        try:
            edges.append([int(tok) for tok in ln.split()])
        except ValueError as exc:
            raise ParseError(f"bad hyperedge line {ln!r}") from exc
    try:
        return make_hypergraph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc

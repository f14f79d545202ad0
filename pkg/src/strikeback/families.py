"""Named graph families and deterministic seeded corpora.

Randomized families are pure functions of their 64-bit seed; a corpus
spec therefore regenerates the identical instance sequence every time,
which is what makes every reported check outcome reproducible from its
descriptor alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Mapping, Union

from .graphs import Graph, GraphError, from_edge_list, is_connected

_M64 = (1 << 64) - 1

REJECTION_BUDGET = 1000


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _M64
    z = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Per-instance seed: stable mixing of a base seed and an index."""
    return splitmix64((seed & _M64) ^ splitmix64(index + 1))


# ---------------------------------------------------------------------------
# deterministic families

def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError(f"complete bipartite needs both parts >= 1, got {a},{b}")
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(n: int) -> Graph:
    """Star on n vertices: centre 0 joined to leaves 1..n-1."""
    if n < 2:
        raise GraphError(f"star needs n >= 2, got {n}")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def petersen() -> Graph:
    """Canonical labelling: outer 5-cycle 0-4, inner 5-cycle 5-9 with
    step-2 chords, spokes i <-> i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, edges)


# ---------------------------------------------------------------------------
# randomized families

def _check_p(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0,1], got {p}")


def gnp(n: int, p: float, seed: int) -> Graph:
    """Binomial random graph; edges drawn in lexicographic pair order."""
    if n < 1:
        raise GraphError(f"gnp needs n >= 1, got {n}")
    _check_p(p)
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return from_edge_list(n, edges)


def connected_gnp(n: int, p: float, seed: int, budget: int = REJECTION_BUDGET) -> Graph:
    """gnp conditioned on connectivity by rejection sampling."""
    if n < 1:
        raise GraphError(f"connected_gnp needs n >= 1, got {n}")
    _check_p(p)
    rng = random.Random(seed)
    for _ in range(budget):
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        g = from_edge_list(n, edges)
        if is_connected(g):
            return g
    raise GraphError(f"no connected gnp({n},{p}) instance within {budget} attempts")


def random_connected_bipartite(a: int, b: int, p: float, seed: int,
                               budget: int = REJECTION_BUDGET) -> Graph:
    """Random bipartite graph on parts {0..a-1}, {a..a+b-1}, connected
    by rejection."""
    if a < 1 or b < 1:
        raise GraphError(f"bipartite parts must be >= 1, got {a},{b}")
    _check_p(p)
    rng = random.Random(seed)
    for _ in range(budget):
        edges = [
            (i, a + j)
            for i in range(a)
            for j in range(b)
            if rng.random() < p
        ]
        g = from_edge_list(a + b, edges)
        if is_connected(g):
            return g
    raise GraphError(f"no connected bipartite({a},{b},{p}) instance within {budget} attempts")


def maximal_outerplanar(n: int, seed: int) -> Graph:
    """Uniformly random triangulation of a convex n-gon.

    Outerplanar by construction: boundary cycle 0..n-1 plus
    non-crossing chords, 2n-3 edges in total.
    """
    if n < 3:
        raise GraphError(f"maximal outerplanar needs n >= 3, got {n}")
    catalan = [1] * (n)
    for m in range(1, n):
        catalan[m] = catalan[m - 1] * 2 * (2 * m - 1) // (m + 1)
    rng = random.Random(seed)
    edges = [(i, (i + 1) % n) for i in range(n)]

    def triangulate(i: int, j: int) -> None:
        # sub-polygon on boundary vertices i..j with ear edge (i,j)
        if j - i < 2:
            return
        r = rng.randrange(catalan[j - i - 1])
        acc = 0
        apex = i + 1
        for k in range(i + 1, j):
            acc += catalan[k - i - 1] * catalan[j - k - 1]
            if r < acc:
                apex = k
                break
        if apex - i >= 2:
            edges.append((i, apex))
        if j - apex >= 2:
            edges.append((apex, j))
        triangulate(i, apex)
        triangulate(apex, j)

    triangulate(0, n - 1)
    return from_edge_list(n, edges)


# ---------------------------------------------------------------------------
# dispatch and corpora

Params = Mapping[str, Union[int, float]]


def generate(family: str, params: Params | None = None, seed: int = 0) -> Graph:
    """Build a named family member; randomized families consume the seed."""
    p = dict(params or {})
    try:
        if family == "cycle":
            return cycle(int(p.pop("n")))
        if family == "path":
            return path(int(p.pop("n")))
        if family == "complete":
            return complete(int(p.pop("n")))
        if family == "complete_bipartite":
            return complete_bipartite(int(p.pop("a")), int(p.pop("b")))
        if family == "star":
            return star(int(p.pop("n")))
        if family == "petersen":
            return petersen()
        if family == "gnp":
            return gnp(int(p.pop("n")), float(p.pop("p")), seed)
        if family == "connected_gnp":
            return connected_gnp(int(p.pop("n")), float(p.pop("p")), seed)
        if family == "random_connected_bipartite":
            return random_connected_bipartite(
                int(p.pop("a")), int(p.pop("b")), float(p.pop("p")), seed
            )
        if family == "maximal_outerplanar":
            return maximal_outerplanar(int(p.pop("n")), seed)
    except KeyError as exc:
        raise GraphError(f"family {family!r} missing parameter {exc}") from exc
    raise GraphError(f"unknown family {family!r}")


@dataclass(frozen=True)
class CorpusSpec:
    """A reproducible sequence of instances of one family."""

    family: str
    params: tuple[tuple[str, Union[int, float]], ...]
    count: int
    seed: int

    @classmethod
    def make(cls, family: str, params: Params, count: int, seed: int) -> "CorpusSpec":
        return cls(family, tuple(sorted(params.items())), count, seed)

    @property
    def params_dict(self) -> dict:
        return dict(self.params)

    def instance_seed(self, index: int) -> int:
        return derive_seed(self.seed, index)

    def instance(self, index: int) -> Graph:
        if not 0 <= index < self.count:
            raise IndexError(index)
        return generate(self.family, self.params_dict, self.instance_seed(index))

    def __iter__(self) -> Iterator[tuple[int, Graph]]:
        for i in range(self.count):
            yield i, self.instance(i)

"""Independent game-value oracle for tiny instances.

Plain depth-bounded minimax with no memoization, written apart from the
attractor solver on purpose so the two can cross-check each other.  A
line that revisits a state on the current path is scored as a robber
win (if the cops can win at all, they can win without repeating a
state), and the depth bound of live-states + 1 plies is the matching
safety net.  Move ordering is only a speedup; it cannot change values.
"""

from __future__ import annotations

import math
from itertools import combinations_with_replacement

from ..graphs import Graph, distances_from
from .rules import Ruleset, Variant


class StateLimitError(RuntimeError):
    """Instance too large for the memoization-free oracle."""


def _live_state_count(n: int, k: int, attacking: bool) -> int:
    levels = range(k + 1) if attacking else (k,)
    total = 0
    for j in levels:
        pairs = n if j == 0 else n * math.comb(n + j - 2, j)
        total += 2 * pairs
    return total


def minimax_cops_win(g: Graph, rules: Ruleset, state_limit: int = 10**5) -> bool:
    """Decide whether rules.k cops win on g, by brute game-tree search."""
    n = g.n
    k = rules.k
    attacking = rules.variant is Variant.ATTACKING
    states = _live_state_count(n, k, attacking)
    if states > state_limit:
        raise StateLimitError(f"{states} live states exceed oracle limit {state_limit}")
    depth_bound = states + 1

    dist = [distances_from(g, v) for v in range(n)]

    def nearest_cop_distance(cops, v):
        return min(dist[c][v] for c in cops)

    def cop_options(cops, robber):
        seen = set()
        out = []
        placements = [()]
        for v in cops:
            placements = [ms + (u,) for ms in placements for u in (v,) + g.neighbors(v)]
        for ms in placements:
            key = tuple(sorted(ms))
            if key not in seen:
                seen.add(key)
                out.append(key)
        out.sort(key=lambda ms: sum(dist[c][robber] for c in ms))
        return out

    def win(cops, robber, cop_turn, depth, path):
        if depth == 0:
            return False
        if cop_turn:
            if any(g.adjacent(c, robber) for c in cops):
                return True
            node = (cops, robber, True)
            if node in path:
                return False
            path.add(node)
            try:
                for ms in cop_options(cops, robber):
                    if win(ms, robber, False, depth - 1, path):
                        return True
                return False
            finally:
                path.discard(node)
        node = (cops, robber, False)
        if node in path:
            return False
        path.add(node)
        try:
            moves = [robber]  # pass
            for u in sorted(g.neighbors(robber),
                            key=lambda u: -nearest_cop_distance(cops, u)):
                occ = cops.count(u)
                if occ == 0:
                    moves.append(u)
                elif attacking and occ == 1:
                    if len(cops) == 1:
                        return False  # last cop eliminated: robber wins
                    moves.append(u)
                # any other occupied vertex is suicide: a cop-win line
            for u in moves:
                if u != robber and attacking and cops.count(u) == 1:
                    survivors = list(cops)
                    survivors.remove(u)
                    if not win(tuple(survivors), u, True, depth - 1, path):
                        return False
                else:
                    if not win(cops, u, True, depth - 1, path):
                        return False
            return True
        finally:
            path.discard(node)

    full = (1 << n) - 1
    placements = sorted(
        combinations_with_replacement(range(n), k),
        key=lambda ms: -bin(_coverage(g, ms)).count("1"),
    )
    for cops0 in placements:
        occupied = set(cops0)
        if all(
            win(cops0, r, True, depth_bound, set())
            for r in range(n)
            if r not in occupied
        ):
            return True
    return False


def _coverage(g: Graph, cops) -> int:
    mask = 0
    for v in cops:
        mask |= g.closed_mask(v)
    return mask

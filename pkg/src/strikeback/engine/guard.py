"""The guard game: can k cops confined to an isometric path punish
every robber entry?

Setup modelling (the informal "after finitely many moves" of the
guarding definition): the robber is placed adversarially anywhere, the
guards then pick any placement on the path in response (placing a guard
on the robber's vertex is an immediate capture), and the robber moves
first from then on.  Guards only ever move along the path.

The robber wins iff one of his moves ends on a path vertex (an
elimination of a lone guard under attacking rules included) and the
guards cannot capture him on the very next move; infinite play without
such an entry is a guard win.  Entries are thus one-shot tests decided
by adjacency, so only the robber's movement outside the path needs game
search, done here by a small backward induction.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations_with_replacement

from ..graphs import Graph, is_isometric
from .rules import Variant


class NotIsometricError(ValueError):
    """The guarded subgraph must be an isometric path."""


@dataclass(frozen=True)
class GuardInstance:
    graph: Graph
    path: tuple[int, ...]
    k: int
    variant: Variant


def guardable(inst: GuardInstance) -> bool:
    """True iff for every robber placement some guard placement wins."""
    g = inst.graph
    if inst.k < 1:
        raise ValueError(f"need at least one guard, got k={inst.k}")
    if not is_isometric(g, inst.path):
        raise NotIsometricError(f"{inst.path} is not an isometric path")
    attacking = inst.variant is Variant.ATTACKING
    hset = set(inst.path)
    hsorted = sorted(hset)

    guard_steps = {
        h: (h,) + tuple(u for u in g.neighbors(h) if u in hset) for h in hsorted
    }
    placements = list(combinations_with_replacement(hsorted, inst.k))

    def guard_moves(p: tuple) -> list[tuple]:
        opts = [()]
        for h in p:
            opts = [ms + (u,) for ms in opts for u in guard_steps[h]]
        return sorted({tuple(sorted(ms)) for ms in opts})

    def entry_punished(p: tuple, dest: int, moved: bool) -> bool:
        """Robber ended a move on path vertex dest: do guards capture?"""
        live = p
        if moved:
            occ = p.count(dest)
            if occ:
                if not attacking or occ >= 2:
                    return True  # walked into a standing capture
                survivors = list(p)
                survivors.remove(dest)
                live = tuple(survivors)
        return any(g.adjacent(gv, dest) for gv in live)

    # Robber-to-move nodes (p, r) exist for r off the guards; guard-to-
    # move nodes only while the robber is off the path (entries are
    # resolved immediately, not played onward).
    entry_win: dict[tuple, bool] = {}
    rob_succ: dict[tuple, list[tuple]] = {}
    preds_of_guard_node: dict[tuple, list[tuple]] = {}
    preds_of_rob_node: dict[tuple, list[tuple]] = {}
    counters: dict[tuple, int] = {}

    for p in placements:
        for r in range(g.n):
            if r in p:
                continue
            node = (p, r)
            win_now = False
            succs = []
            for dest in (r,) + g.neighbors(r):
                if dest in hset:
                    if not entry_punished(p, dest, moved=dest != r):
                        win_now = True
                else:
                    succs.append((p, dest))
                    preds_of_guard_node.setdefault((p, dest), []).append(node)
            entry_win[node] = win_now
            rob_succ[node] = succs
        for r in range(g.n):
            if r in hset:
                continue
            gnode = (p, r)
            succs = [(q, r) for q in guard_moves(p)]
            counters[gnode] = len(succs)
            for s in succs:
                preds_of_rob_node.setdefault(s, []).append(gnode)

    robber_wins: set[tuple] = set()
    guard_node_lost: set[tuple] = set()
    queue: deque[tuple[str, tuple]] = deque()
    for node, win_now in entry_win.items():
        if win_now:
            robber_wins.add(node)
            queue.append(("R", node))
    while queue:
        side, node = queue.popleft()
        if side == "R":
            for gnode in preds_of_rob_node.get(node, []):
                counters[gnode] -= 1
                if counters[gnode] == 0:
                    guard_node_lost.add(gnode)
                    queue.append(("G", gnode))
        else:
            for rnode in preds_of_guard_node.get(node, []):
                if rnode not in robber_wins:
                    robber_wins.add(rnode)
                    queue.append(("R", rnode))

    for r0 in range(g.n):
        if not any(r0 in p or (p, r0) not in robber_wins for p in placements):
            return False
    return True

"""Dense combinatorial indexing of game states.

A state (j live cops as a sorted multiset, robber vertex, side to move)
maps to a flat array slot, so the solver can use plain arrays for
labels, ranks and successor counters.  Multisets are ranked in
colexicographic order via the combinatorial number system: for sorted
multiset m, rank = sum over positions i of C(m[i] + i, i + 1).

Slots whose multiset contains the robber's vertex are unreachable in
live play and stay unused; they are excluded from valid-state counts.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .rules import GameState, Turn


def binomial_table(rows: int, cols: int) -> list[list[int]]:
    """C(a, b) for 0 <= a < rows, 0 <= b < cols (zero where b > a)."""
    table = [[0] * cols for _ in range(rows)]
    for a in range(rows):
        table[a][0] = 1
        for b in range(1, min(a, cols - 1) + 1):
            table[a][b] = table[a - 1][b - 1] + table[a - 1][b]
    return table


def iter_multisets(n: int, j: int) -> Iterator[tuple[int, ...]]:
    """Sorted multisets of size j over 0..n-1 in colex (= rank) order."""
    ms = [0] * j
    if j == 0:
        yield ()
        return
    while True:
        yield tuple(ms)
        i = 0
        while i < j:
            cap = ms[i + 1] if i + 1 < j else n - 1
            if ms[i] < cap:
                break
            i += 1
        if i == j:
            return
        ms[i] += 1
        for t in range(i):
            ms[t] = 0


class StateSpace:
    """Bijection between game states and dense ids for one (n, k, variant)."""

    __slots__ = ("n", "k", "attacking", "j_levels", "base", "level_size", "total", "_binom")

    def __init__(self, n: int, k: int, attacking: bool):
        self.n = n
        self.k = k
        self.attacking = attacking
        self.j_levels = tuple(range(k + 1)) if attacking else (k,)
        self._binom = binomial_table(n + k + 1, k + 2)
        self.base = {}
        self.level_size = {}
        offset = 0
        for j in self.j_levels:
            self.base[j] = offset
            size = self.multiset_count(j) * n * 2
            self.level_size[j] = size
            offset += size
        self.total = offset

    def binom(self, a: int, b: int) -> int:
        return self._binom[a][b] if 0 <= a < len(self._binom) else 0

    def multiset_count(self, j: int) -> int:
        return self._binom[self.n + j - 1][j] if j > 0 else 1

    def multiset_rank(self, ms: Sequence[int]) -> int:
        return sum(self._binom[v + i][i + 1] for i, v in enumerate(ms))

    def multiset_unrank(self, j: int, rank: int) -> tuple[int, ...]:
        out = [0] * j
        rem = rank
        hi = self.n - 1 + j - 1
        for i in range(j - 1, -1, -1):
            c = hi
            while self._binom[c][i + 1] > rem:
                c -= 1
            out[i] = c - i
            rem -= self._binom[c][i + 1]
            hi = c - 1
        return tuple(out)

    def sid(self, j: int, mrank: int, robber: int, turn: int) -> int:
        return self.base[j] + (mrank * self.n + robber) * 2 + turn

    def decode(self, sid: int) -> tuple[int, int, int, int]:
        for j in reversed(self.j_levels):
            if sid >= self.base[j]:
                rem = sid - self.base[j]
                turn = rem & 1
                rem >>= 1
                return j, rem // self.n, rem % self.n, turn
        raise IndexError(sid)

    def state_id(self, s: GameState) -> int:
        cops = tuple(sorted(s.cops))
        j = len(cops)
        if j not in self.base:
            raise ValueError(f"state with {j} cops outside this space (k={self.k})")
        turn = 0 if s.to_move is Turn.COPS else 1
        return self.sid(j, self.multiset_rank(cops), s.robber, turn)

    def state(self, sid: int) -> GameState:
        j, mrank, robber, turn = self.decode(sid)
        return GameState(
            self.multiset_unrank(j, mrank),
            robber,
            Turn.COPS if turn == 0 else Turn.ROBBER,
        )

    def is_valid(self, sid: int) -> bool:
        j, mrank, robber, _ = self.decode(sid)
        return robber not in self.multiset_unrank(j, mrank)

    def valid_state_count(self) -> int:
        total = 0
        for j in self.j_levels:
            pairs = self.n * self.multiset_count(j)
            if j > 0:
                colocated = self.n * (self.multiset_count(j) - self.binom(self.n + j - 2, j))
                pairs -= colocated
            total += 2 * pairs
        return total

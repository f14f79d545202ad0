"""Exact game solving by backward induction over the full state space.

The kernel labels every state (cop-win or robber-win) and assigns
optimal ranks: a capture transition has rank 0, a cop-move state is
1 + the minimum over cop-win successors, a robber-move state is 1 + the
maximum over its successors.  Rank therefore counts single moves (by
either side) to capture under optimal play.

The cops win the game on G iff some opening multiset placement leaves
every cop-free robber placement in a cop-win cops-to-move state; if the
cops cover all of V the robber cannot even be placed and loses
immediately.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..graphs import Graph, domination_number, is_connected
from .backend import BACKEND, get_backend
from .indexing import StateSpace, iter_multisets
from .rules import (
    GameState,
    MalformedStateError,
    Ruleset,
    Terminal,
    Turn,
    Variant,
    cop_successors,
    robber_successors,
)

DEFAULT_BUDGET = 10**8


class BudgetExceededError(RuntimeError):
    """Solve aborted by the transition budget (kept for reproducibility
    instead of a wall-clock limit)."""

    def __init__(self, message: str, partial_states: int, transitions: int):
        super().__init__(message)
        self.partial_states = partial_states
        self.transitions = transitions


@dataclass(frozen=True)
class Metrics:
    states: int
    transitions: int
    elapsed_s: float
    backend: str


@dataclass(frozen=True)
class InitialPlacement:
    cops: tuple[int, ...]
    robber: Optional[int]  # worst-case robber reply; None if cops cover V
    rank: Optional[int]


def _csr(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(g.n + 1, dtype=np.int32)
    flat: list[int] = []
    for v in range(g.n):
        flat.extend(g.neighbors(v))
        indptr[v + 1] = len(flat)
    return indptr, np.array(flat, dtype=np.int32)


class SolveResult:
    """Solved game: winner, rank table, and on-demand optimal strategies."""

    def __init__(self, graph: Graph, rules: Ruleset, space: StateSpace,
                 labels: np.ndarray, ranks: np.ndarray, cops_win: bool,
                 initial: Optional[InitialPlacement], metrics: Metrics):
        self.graph = graph
        self.rules = rules
        self.space = space
        self.labels = labels
        self.ranks = ranks
        self.cops_win = cops_win
        self.initial = initial
        self.metrics = metrics

    @property
    def variant(self) -> Variant:
        return self.rules.variant

    @property
    def k(self) -> int:
        return self.rules.k

    def _sid(self, state: GameState) -> int:
        if state.robber in state.cops:
            raise MalformedStateError(f"robber co-located with a cop in {state}")
        return self.space.state_id(state)

    def is_cop_win(self, state: GameState) -> bool:
        return bool(self.labels[self._sid(state)])

    def rank_of(self, state: GameState) -> int:
        return int(self.ranks[self._sid(state)])

    def best_cop_move(self, state: GameState) -> GameState:
        """Optimal successor of a cop-win cops-to-move state.

        Capture when possible; otherwise the minimum-rank cop-win
        successor, ties broken by smallest state index.  A returned
        state with a cop on the robber's vertex is the capture itself.
        """
        if state.to_move is not Turn.COPS:
            raise MalformedStateError(f"best_cop_move on a {state.to_move} state")
        sid = self._sid(state)
        if not self.labels[sid]:
            raise KeyError(f"no cop strategy from robber-win state {state}")
        adjacent = [v for v in state.cops if self.graph.adjacent(v, state.robber)]
        if adjacent:
            moved = list(state.cops)
            moved.remove(adjacent[0])
            moved.append(state.robber)
            return GameState(tuple(sorted(moved)), state.robber, Turn.ROBBER)
        best = None
        for succ, _flag in cop_successors(self.graph, state):
            ssid = self.space.state_id(succ)
            if not self.labels[ssid]:
                continue
            key = (int(self.ranks[ssid]), ssid)
            if best is None or key < best[0]:
                best = (key, succ)
        if best is None:
            raise KeyError(f"no cop-win successor from {state}")
        return best[1]

    def best_robber_move(self, state: GameState) -> GameState:
        """Optimal successor of a robber-to-move state.

        From a robber-win state: the smallest-index successor that is
        not cop-win.  From a cop-win state: the maximum-rank successor
        (longest survival), ties broken by smallest state index.
        """
        if state.to_move is not Turn.ROBBER:
            raise MalformedStateError(f"best_robber_move on a {state.to_move} state")
        sid = self._sid(state)
        succs = robber_successors(self.graph, self.rules, state)
        if not self.labels[sid]:
            best = None
            for succ, flag in succs:
                if flag is Terminal.COP_WIN:
                    continue
                ssid = self.space.state_id(succ)
                if self.labels[ssid]:
                    continue
                if best is None or ssid < best[0]:
                    best = (ssid, succ)
            assert best is not None, "robber-win state without an escape"
            return best[1]
        best = None
        for succ, flag in succs:
            if flag is Terminal.COP_WIN:
                continue
            ssid = self.space.state_id(succ)
            key = (-int(self.ranks[ssid]), ssid)
            if best is None or key < best[0]:
                best = (key, succ)
        assert best is not None
        return best[1]

    def export_strategy(self) -> dict:
        """Materialize the optimal move tables for every cop-win state."""
        cop_moves = {}
        robber_moves = {}
        for sid in range(self.space.total):
            if not self.labels[sid]:
                continue
            state = self.space.state(sid)
            if state.robber in state.cops:
                continue
            key = _state_key(state)
            if state.to_move is Turn.COPS:
                cop_moves[key] = _state_key(self.best_cop_move(state))
            else:
                robber_moves[key] = _state_key(self.best_robber_move(state))
        return {"cop": cop_moves, "robber": robber_moves}


def _state_key(state: GameState) -> str:
    cops = ".".join(map(str, state.cops))
    side = "C" if state.to_move is Turn.COPS else "R"
    return f"{cops}|{state.robber}|{side}"


def solve_k(g: Graph, rules: Ruleset, budget: int = DEFAULT_BUDGET,
            backend: str | None = None) -> SolveResult:
    """Solve the game on a connected graph with rules.k cops."""
    if not is_connected(g):
        raise ValueError("solver requires a connected graph")
    started = time.perf_counter()
    attacking = rules.variant is Variant.ATTACKING
    impl = get_backend(backend)
    indptr, indices = _csr(g)
    status, labels, ranks, valid, transitions = impl.solve_kernel(
        g.n, rules.k, attacking, indptr, indices, budget
    )
    if status != 0:
        raise BudgetExceededError(
            f"transition budget {budget} exceeded after {valid} states",
            partial_states=int(valid),
            transitions=int(transitions),
        )
    space = StateSpace(g.n, rules.k, attacking)
    label_list = labels.tolist()
    rank_list = ranks.tolist()

    best = None  # ((worst_rank, mrank), cops, worst_robber)
    n = g.n
    for mrank, ms in enumerate(iter_multisets(n, rules.k)):
        occupied = set(ms)
        base = space.base[rules.k] + mrank * n * 2
        worst_rank = -1
        worst_robber = None
        all_win = True
        for r in range(n):
            if r in occupied:
                continue
            sid = base + r * 2
            if label_list[sid]:
                if rank_list[sid] > worst_rank:
                    worst_rank = rank_list[sid]
                    worst_robber = r
            else:
                all_win = False
                break
        if not all_win:
            continue
        if worst_robber is None:
            cand = ((0, mrank), ms, None)
        else:
            cand = ((worst_rank, mrank), ms, worst_robber)
        if best is None or cand[0] < best[0]:
            best = cand

    cops_win = best is not None
    initial = None
    if cops_win:
        (worst_rank, _), cops, worst_robber = best
        initial = InitialPlacement(
            cops=cops,
            robber=worst_robber,
            rank=None if worst_robber is None else worst_rank,
        )
    metrics = Metrics(
        states=int(valid),
        transitions=int(transitions),
        elapsed_s=time.perf_counter() - started,
        backend=impl.BACKEND_NAME,
    )
    return SolveResult(g, rules, space, labels, ranks, cops_win, initial, metrics)


def solve_optimal(g: Graph, variant: Variant, budget: int = DEFAULT_BUDGET,
                  backend: str | None = None) -> tuple[int, SolveResult]:
    """Smallest winning cop count with its solve.

    Cops on a minimum dominating set capture immediately after
    placement, so the search is cut off at the domination number.
    """
    gamma, _ = domination_number(g)
    for k in range(1, gamma + 1):
        result = solve_k(g, Ruleset(variant, k), budget=budget, backend=backend)
        if result.cops_win:
            return k, result
    raise AssertionError(f"domination-number cutoff {gamma} failed to win")


def cop_number(g: Graph, variant: Variant, budget: int = DEFAULT_BUDGET,
               backend: str | None = None) -> int:
    return solve_optimal(g, variant, budget=budget, backend=backend)[0]

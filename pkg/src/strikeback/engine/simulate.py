"""Referee for playing out strategies, plus the standard policies.

A cop policy maps a cops-to-move state to the next cop multiset; a
robber policy maps a robber-to-move state to a destination vertex
(returning the current vertex is a pass).  The referee enforces every
rule, records attack/capture events, and raises on illegal moves with
the offending state attached.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from ..graphs import Graph
from .rules import GameState, Ruleset, Turn, Variant, canonical
from .solver import SolveResult

CopPolicy = Callable[[GameState], tuple]
RobberPolicy = Callable[[GameState], int]

CAPTURE = "capture"
ROBBER_WIN = "robber_win"
SURVIVED = "survived"


class IllegalMoveError(ValueError):
    def __init__(self, message: str, state: GameState):
        super().__init__(f"{message} (state {state})")
        self.state = state


@dataclass(frozen=True)
class Event:
    round: int
    actor: str
    kind: str  # move | pass | attack | capture | suicide
    detail: str


@dataclass
class Transcript:
    outcome: str
    plies: int
    events: list[Event] = field(default_factory=list)
    states: list[GameState] = field(default_factory=list)

    @property
    def rounds(self) -> int:
        return sum(1 for e in self.events if e.actor == "cops")


def _legal_cop_step(g: Graph, cops: tuple, target: tuple) -> bool:
    """Each cop stays or crosses one edge (a multiset matching)."""
    if len(target) != len(cops):
        return False

    def match(i: int, remaining: list[int]) -> bool:
        if i == len(cops):
            return True
        v = cops[i]
        tried = set()
        for idx, u in enumerate(remaining):
            if u in tried:
                continue
            tried.add(u)
            if u == v or g.adjacent(u, v):
                rest = remaining[:idx] + remaining[idx + 1 :]
                if match(i + 1, rest):
                    return True
        return False

    return match(0, list(target))


def simulate(
    g: Graph,
    rules: Ruleset,
    cop_policy: CopPolicy,
    robber_policy: RobberPolicy,
    max_rounds: int,
    initial_cops: tuple,
    initial_robber: int,
) -> Transcript:
    """Play the game out for at most max_rounds full rounds."""
    cops = canonical(initial_cops)
    robber = initial_robber
    if len(cops) != rules.k:
        raise ValueError(f"placement has {len(cops)} cops, rules say {rules.k}")
    if robber in cops:
        raise IllegalMoveError(
            "robber placed on an occupied vertex", GameState(cops, robber, Turn.COPS)
        )
    t = Transcript(outcome=SURVIVED, plies=0)
    t.states.append(GameState(cops, robber, Turn.COPS))
    attacking = rules.variant is Variant.ATTACKING

    for rnd in range(1, max_rounds + 1):
        state = GameState(cops, robber, Turn.COPS)
        target = canonical(cop_policy(state))
        if not _legal_cop_step(g, cops, target):
            raise IllegalMoveError(f"illegal cop move {target}", state)
        moved = target != cops
        cops = target
        t.plies += 1
        t.events.append(Event(rnd, "cops", "move" if moved else "pass", f"->{cops}"))
        t.states.append(GameState(cops, robber, Turn.ROBBER))
        if robber in cops:
            t.events.append(Event(rnd, "cops", CAPTURE, f"at {robber}"))
            t.outcome = CAPTURE
            return t

        state = GameState(cops, robber, Turn.ROBBER)
        dest = robber_policy(state)
        if dest != robber and not g.adjacent(robber, dest):
            raise IllegalMoveError(f"illegal robber move to {dest}", state)
        t.plies += 1
        if dest == robber:
            t.events.append(Event(rnd, "robber", "pass", f"at {robber}"))
        else:
            occupancy = cops.count(dest)
            if occupancy == 0:
                t.events.append(Event(rnd, "robber", "move", f"->{dest}"))
                robber = dest
            elif not attacking:
                t.events.append(Event(rnd, "robber", "suicide", f"onto cop at {dest}"))
                t.outcome = CAPTURE
                return t
            elif occupancy == 1:
                survivors = list(cops)
                survivors.remove(dest)
                cops = tuple(survivors)
                robber = dest
                t.events.append(Event(rnd, "robber", "attack", f"cop at {dest} eliminated"))
                if not cops:
                    t.outcome = ROBBER_WIN
                    return t
            else:
                t.events.append(
                    Event(rnd, "robber", "suicide", f"onto {occupancy} cops at {dest}")
                )
                t.outcome = CAPTURE
                return t
        t.states.append(GameState(cops, robber, Turn.COPS))
    return t


# ---------------------------------------------------------------------------
# policies

def optimal_cop_policy(result: SolveResult) -> CopPolicy:
    def policy(state: GameState) -> tuple:
        if result.is_cop_win(state):
            return result.best_cop_move(state).cops
        return state.cops  # lost position: hold

    return policy


def optimal_robber_policy(result: SolveResult) -> RobberPolicy:
    def policy(state: GameState) -> int:
        return result.best_robber_move(state).robber

    return policy


def pass_robber_policy(state: GameState) -> int:
    return state.robber


def stationary_cop_policy(state: GameState) -> tuple:
    return state.cops

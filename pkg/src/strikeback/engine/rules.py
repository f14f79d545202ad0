"""Move semantics for Cops and Robbers and Cops and Attacking Robbers.

Cops are interchangeable, so cop positions are kept as a sorted
multiset tuple (the canonical form).  In the attacking variant the
robber may move onto a vertex holding exactly one cop, which removes
her from the game; moving onto two or more cops ends the game with a
capture, because a cop is still standing on the robber's vertex.

These functions are the reference semantics used by the simulator and
the tests; the solver kernels inline equivalent logic for speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from ..graphs import Graph


class Variant(Enum):
    CLASSIC = "classic"
    ATTACKING = "attacking"


CLASSIC = Variant.CLASSIC
ATTACKING = Variant.ATTACKING


class Turn(Enum):
    COPS = "cops"
    ROBBER = "robber"


class Terminal(Enum):
    NONE = "none"
    COP_WIN = "cop_win"
    ROBBER_WIN = "robber_win"


class MalformedStateError(ValueError):
    """State violates a game invariant (e.g. robber on a cop while live)."""


@dataclass(frozen=True)
class Ruleset:
    variant: Variant
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"need at least one cop, got k={self.k}")


class GameState(NamedTuple):
    cops: tuple[int, ...]
    robber: int
    to_move: Turn


def canonical(cops) -> tuple[int, ...]:
    return tuple(sorted(cops))


def _remove_one(cops: tuple[int, ...], v: int) -> tuple[int, ...]:
    out = list(cops)
    out.remove(v)
    return tuple(out)


def robber_successors(
    g: Graph, rules: Ruleset, s: GameState
) -> list[tuple[GameState, Terminal]]:
    """All robber options: pass first, then neighbours in ascending order."""
    if s.to_move is not Turn.ROBBER:
        raise MalformedStateError(f"robber_successors on a {s.to_move} state")
    if s.robber in s.cops:
        raise MalformedStateError(f"live robber state with a cop on {s.robber}")
    out: list[tuple[GameState, Terminal]] = [
        (GameState(s.cops, s.robber, Turn.COPS), Terminal.NONE)
    ]
    for u in g.neighbors(s.robber):
        occupancy = s.cops.count(u)
        if occupancy == 0:
            out.append((GameState(s.cops, u, Turn.COPS), Terminal.NONE))
        elif rules.variant is Variant.CLASSIC:
            out.append((GameState(s.cops, u, Turn.COPS), Terminal.COP_WIN))
        elif occupancy == 1:
            remaining = _remove_one(s.cops, u)
            flag = Terminal.ROBBER_WIN if not remaining else Terminal.NONE
            out.append((GameState(remaining, u, Turn.COPS), flag))
        else:
            # one cop dies, the other stands on the robber: capture
            out.append((GameState(_remove_one(s.cops, u), u, Turn.COPS), Terminal.COP_WIN))
    return out


def cop_successors(g: Graph, s: GameState) -> list[tuple[GameState, Terminal]]:
    """All combined cop moves (each cop stays or steps), deduplicated and
    returned in canonical (sorted multiset) order."""
    if s.to_move is not Turn.COPS:
        raise MalformedStateError(f"cop_successors on a {s.to_move} state")
    placements = {()}
    for v in s.cops:
        options = (v,) + g.neighbors(v)
        placements = {ms + (u,) for ms in placements for u in options}
    multisets = sorted({canonical(ms) for ms in placements})
    return [
        (
            GameState(ms, s.robber, Turn.ROBBER),
            Terminal.COP_WIN if s.robber in ms else Terminal.NONE,
        )
        for ms in multisets
    ]

"""Exact game solving: rules, attractor solver, oracle, simulation, guarding."""

from .rules import (
    ATTACKING,
    CLASSIC,
    GameState,
    Ruleset,
    Terminal,
    Turn,
    Variant,
    cop_successors,
    robber_successors,
)
from .solver import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    SolveResult,
    cop_number,
    solve_k,
    solve_optimal,
)
from .minimax import StateLimitError, minimax_cops_win
from .simulate import (
    IllegalMoveError,
    Transcript,
    optimal_cop_policy,
    optimal_robber_policy,
    pass_robber_policy,
    simulate,
    stationary_cop_policy,
)
from .guard import GuardInstance, guardable

__all__ = [
    "ATTACKING",
    "CLASSIC",
    "GameState",
    "Ruleset",
    "Terminal",
    "Turn",
    "Variant",
    "cop_successors",
    "robber_successors",
    "DEFAULT_BUDGET",
    "BudgetExceededError",
    "SolveResult",
    "cop_number",
    "solve_k",
    "solve_optimal",
    "StateLimitError",
    "minimax_cops_win",
    "IllegalMoveError",
    "Transcript",
    "optimal_cop_policy",
    "optimal_robber_policy",
    "pass_robber_policy",
    "simulate",
    "stationary_cop_policy",
    "GuardInstance",
    "guardable",
]

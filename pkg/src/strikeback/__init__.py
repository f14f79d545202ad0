"""Exact solving and mechanical theorem checking for Cops and Robbers
and Cops and Attacking Robbers on small graphs."""

from .graphs import Graph, from_edge_list, parse_graph6, to_graph6
from .engine import (
    ATTACKING,
    CLASSIC,
    GameState,
    Ruleset,
    cop_number,
    solve_k,
    solve_optimal,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "from_edge_list",
    "parse_graph6",
    "to_graph6",
    "ATTACKING",
    "CLASSIC",
    "GameState",
    "Ruleset",
    "cop_number",
    "solve_k",
    "solve_optimal",
    "__version__",
]

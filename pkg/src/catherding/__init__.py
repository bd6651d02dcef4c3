"""Exact solver, strategies and verification tools for Cat Herding on graphs."""

from .graph import Graph, GraphError, bridges, two_edge_connected_components
from .records import GameRecord, ReplayError, replay
from .solver import (GameState, IllegalMoveError, Side, Solver, best_response_score, cut_value,
                     cut_value_at, optimal_move, optimal_trace, solve)

__version__ = "0.1.0"

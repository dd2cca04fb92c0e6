"""Solvers for two-player games with mean-payoff and parity objectives."""
from .core import PLAYER1, PLAYER2, GameGraph, Owner, attractor, compress_priorities, subgame, validate
from .decremental import DecrementalState
from .measure import TOP, Stats, solve_bounded, solve_static
from .parity import solve_mpp_threshold
from .two_priority import solve_mp_buchi, solve_mp_cobuchi
from .value import BOTTOM, candidate_set, solve_values, threshold_at

__all__ = [
    "BOTTOM", "PLAYER1", "PLAYER2", "TOP", "DecrementalState", "GameGraph", "Owner", "Stats",
    "attractor", "candidate_set", "compress_priorities", "solve_bounded", "solve_mp_buchi",
    "solve_mp_cobuchi", "solve_mpp_threshold", "solve_static", "solve_values", "subgame",
    "threshold_at", "validate",
]

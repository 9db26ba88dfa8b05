"""Hamiltonian paths on projective checkerboards.

The m x n projective checkerboard has squares (p, q) with 0 <= p < m and
0 <= q < n; each square has an east and a north successor, and stepping off
the right or top edge re-enters on the opposite edge with the other
coordinate flipped.
"""

__version__ = "0.1.0"

from .board import Board, BoardError, Diagonal, board  # noqa: E402
from .decoder import (  # noqa: E402
    CapExceeded,
    EnumerationReport,
    InvalidSpec,
    PathSpec,
    decode,
    enumerate_dfs,
    enumerate_diagonal,
    spec_of,
)
from .walk import MixedDiagonal, Walk, WalkError, east_set, invert, is_hamiltonian  # noqa: E402

__all__ = [
    "Board",
    "BoardError",
    "CapExceeded",
    "Diagonal",
    "EnumerationReport",
    "InvalidSpec",
    "MixedDiagonal",
    "PathSpec",
    "Walk",
    "WalkError",
    "board",
    "decode",
    "east_set",
    "enumerate_dfs",
    "enumerate_diagonal",
    "invert",
    "is_hamiltonian",
    "spec_of",
]

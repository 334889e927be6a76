"""
Noncontextual value assignments: every observable of the square gets a fixed
outcome +1 or -1 regardless of the line it is measured with.

Assignments are enumerated as 9-bit integers. Bit 8 is grid position (0, 0),
bit 0 is position (2, 2) (row-major scan); a set bit means the value -1, so
index 0 is the all +1 assignment.
"""
from __future__ import annotations
from dataclasses import dataclass
from typing import Dict, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .pm_square import LINES, PMSquare, line_positions, pm_square

N_POSITIONS = 9
N_ASSIGNMENTS = 2 ** N_POSITIONS


@dataclass(frozen=True)
class ValueAssignment:
    values: Tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != N_POSITIONS:
            raise ValueError(f"An assignment holds exactly {N_POSITIONS} values. Got {len(self.values)}")
        if any(v not in (1, -1) for v in self.values):
            raise ValueError(f"Assigned values should be +1 or -1. Got {self.values}")
        object.__setattr__(self, 'values', tuple(int(v) for v in self.values))

    @classmethod
    def from_index(cls, index: int) -> ValueAssignment:
        if not 0 <= index < N_ASSIGNMENTS:
            raise ValueError(f"Assignment index should be in [0, {N_ASSIGNMENTS}). Got {index}")
        return cls(tuple(-1 if (index >> (N_POSITIONS - 1 - pos)) & 1 else 1
                         for pos in range(N_POSITIONS)))

    @classmethod
    def from_grid(cls, grid: Sequence[Sequence[int]]) -> ValueAssignment:
        return cls(tuple(v for row in grid for v in row))

    @property
    def index(self) -> int:
        return sum(1 << (N_POSITIONS - 1 - pos) for pos, v in enumerate(self.values) if v == -1)

    def __getitem__(self, position: Tuple[int, int]) -> int:
        row, col = position
        return self.values[3 * row + col]

    def flipped(self, row: int, col: int) -> ValueAssignment:
        values = list(self.values)
        values[3 * row + col] *= -1
        return ValueAssignment(tuple(values))

    def as_grid(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(self.values[3 * row:3 * row + 3] for row in range(3))


def line_correlations(assignment: ValueAssignment, lines: Sequence[str] = LINES) -> Dict[str, int]:
    """Product of the three assigned values of each line, each +1 or -1."""
    correlations = {}
    for line in lines:
        value = 1
        for position in line_positions(line):
            value *= assignment[position]
        correlations[line] = value
    return correlations


def classical_beta(assignment: ValueAssignment, sq: Optional[PMSquare] = None,
                   lines: Sequence[str] = LINES) -> float:
    sq = sq or pm_square()
    correlations = line_correlations(assignment, lines)
    return float(sum(sq.sign(line) * value for line, value in correlations.items()))


def _all_assignment_values() -> np.ndarray:
    """(512, 9) array of +-1, row k is ValueAssignment.from_index(k)."""
    indices = np.arange(N_ASSIGNMENTS)[:, None]
    shifts = N_POSITIONS - 1 - np.arange(N_POSITIONS)[None, :]
    return 1 - 2 * ((indices >> shifts) & 1)


def all_classical_betas(sq: Optional[PMSquare] = None, lines: Sequence[str] = LINES) -> np.ndarray:
    """classical_beta of every assignment, indexed by enumeration index."""
    sq = sq or pm_square()
    values = _all_assignment_values()
    betas = np.zeros(N_ASSIGNMENTS, dtype=int)
    for line in lines:
        columns = [3 * row + col for row, col in line_positions(line)]
        betas += sq.sign(line) * np.prod(values[:, columns], axis=1)
    return betas


class NCHVBound(NamedTuple):
    value: float
    assignment: ValueAssignment


def nchv_max(sq: Optional[PMSquare] = None, lines: Sequence[str] = LINES) -> NCHVBound:
    """Exhaustive maximum over all 512 assignments. Lowest index wins ties."""
    betas = all_classical_betas(sq, lines)
    best = int(np.argmax(betas))  # argmax returns the first maximum
    return NCHVBound(float(betas[best]), ValueAssignment.from_index(best))

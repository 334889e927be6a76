"""
The 3x3 square of two-qubit observables whose rows and columns are sets of
commuting observables, and the quantum value of the signed sum of the six
line correlations.

    r1:  Z1  1Z  ZZ
    r2:  1X  X1  XX
    r3:  ZX  XZ  YY

Every line multiplies to +identity except column c3 which gives -identity.
"""
from __future__ import annotations
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from ..linalg import DensityMatrix, expectation
from ..pauli import PauliString, commutes, format_pauli, parse_pauli, product, to_matrix

LINES = ('r1', 'r2', 'r3', 'c1', 'c2', 'c3')
PM_GRID = (('Z1', '1Z', 'ZZ'),
           ('1X', 'X1', 'XX'),
           ('ZX', 'XZ', 'YY'))
PM_SIGNS = (1, 1, 1, 1, 1, -1)


def line_positions(line: str) -> Tuple[Tuple[int, int], ...]:
    """Grid positions (row, column) of a line name, e.g. 'c3' -> ((0,2),(1,2),(2,2))."""
    if line not in LINES:
        raise ValueError(f"Unknown line '{line}'. Possible lines are {LINES}")
    index = int(line[1]) - 1
    if line[0] == 'r':
        return tuple((index, col) for col in range(3))
    return tuple((row, index) for row in range(3))


@dataclass(frozen=True)
class PMSquare:
    grid: Tuple[Tuple[PauliString, ...], ...]
    line_signs: Tuple[int, ...] = PM_SIGNS

    def __post_init__(self):
        if len(self.grid) != 3 or any(len(row) != 3 for row in self.grid):
            raise ValueError("Square grid should be 3x3")
        if len(self.line_signs) != len(LINES) or any(s not in (1, -1) for s in self.line_signs):
            raise ValueError(f"Square needs six line signs in (+1, -1). Got {self.line_signs}")
        n_qubits = {p.n for row in self.grid for p in row}
        if len(n_qubits) != 1:
            raise ValueError("All observables of a square should act on the same number of qubits")
        object.__setattr__(self, 'grid', tuple(tuple(row) for row in self.grid))
        object.__setattr__(self, 'line_signs', tuple(int(s) for s in self.line_signs))

    @classmethod
    def from_text(cls, grid: Sequence[Sequence[str]],
                  line_signs: Sequence[int] = PM_SIGNS) -> PMSquare:
        return cls(tuple(tuple(parse_pauli(token) for token in row) for row in grid), tuple(line_signs))

    @property
    def n_qubits(self) -> int:
        return self.grid[0][0].n

    def sign(self, line: str) -> int:
        line_positions(line)
        return self.line_signs[LINES.index(line)]

    def observables(self, line: str) -> List[PauliString]:
        return [self.grid[row][col] for row, col in line_positions(line)]

    def with_entry(self, row: int, col: int, observable: PauliString) -> PMSquare:
        grid = [list(r) for r in self.grid]
        grid[row][col] = observable
        return PMSquare(tuple(tuple(r) for r in grid), self.line_signs)

    def with_signs(self, line_signs: Sequence[int]) -> PMSquare:
        return PMSquare(self.grid, tuple(line_signs))


def pm_square() -> PMSquare:
    return PMSquare.from_text(PM_GRID, PM_SIGNS)


def line_product(sq: PMSquare, line: str) -> PauliString:
    return product(sq.observables(line))


def line_product_orderings(sq: PMSquare, line: str) -> List[PauliString]:
    """Products of a line for all 6 orderings of its observables."""
    return [product(order) for order in permutations(sq.observables(line))]


class LineCheck(NamedTuple):
    line: str
    commutation: Tuple[bool, bool, bool]
    product: PauliString
    expected_sign: int

    @property
    def commuting(self) -> bool:
        return all(self.commutation)

    @property
    def product_ok(self) -> bool:
        return self.product.is_identity and self.product.phase == (0 if self.expected_sign == 1 else 2)

    @property
    def passed(self) -> bool:
        return self.commuting and self.product_ok


@dataclass(frozen=True)
class SquareReport:
    checks: Tuple[LineCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def line(self, line: str) -> LineCheck:
        line_positions(line)
        return self.checks[LINES.index(line)]

    def _asdict(self) -> dict:
        return {
            'passed': self.passed,
            'lines': {check.line: {
                'commutation': list(check.commutation),
                'product': format_pauli(check.product),
                'expected_sign': check.expected_sign,
                'passed': check.passed,
            } for check in self.checks}}


def verify_square(sq: PMSquare) -> SquareReport:
    """Per line: pairwise commutation (pairs 12, 13, 23) and the line product."""
    checks = []
    for line in LINES:
        observables = sq.observables(line)
        commutation = tuple(commutes(a, b) for a, b in combinations(observables, 2))
        checks.append(LineCheck(line, commutation, product(observables), sq.sign(line)))  # type: ignore
    return SquareReport(tuple(checks))


def line_expectations(rho: DensityMatrix, sq: Optional[PMSquare] = None,
                      lines: Sequence[str] = LINES) -> Dict[str, float]:
    """<pi_line> = tr(rho * line_product) for each requested line."""
    sq = sq or pm_square()
    if rho.dim != 2 ** sq.n_qubits:
        raise ValueError(f"State of dimension {rho.dim} does not match a {sq.n_qubits}-qubit square")
    return {line: expectation(rho, to_matrix(line_product(sq, line))) for line in lines}


def beta_quantum(rho: DensityMatrix, sq: Optional[PMSquare] = None,
                 lines: Sequence[str] = LINES) -> float:
    """Signed sum of line correlations, sign of each line taken from the square."""
    sq = sq or pm_square()
    values = line_expectations(rho, sq, lines)
    return float(sum(sq.sign(line) * value for line, value in values.items()))


def format_square(sq: PMSquare) -> str:
    """Three lines of three Pauli tokens, then a line with the six signs."""
    rows = [' '.join(format_pauli(p) for p in row) for row in sq.grid]
    signs = ' '.join('+' if s == 1 else '-' for s in sq.line_signs)
    return '\n'.join(rows + [signs]) + '\n'


def parse_square(text: str) -> PMSquare:
    lines = [line.split('#')[0].strip() for line in text.replace('−', '-').splitlines()]
    lines = [line for line in lines if line]
    if len(lines) != 4:
        raise ValueError(f"Square text should have 3 rows and a sign line. Got {len(lines)} lines")
    grid = [line.split() for line in lines[:3]]
    for index, row in enumerate(grid, start=1):
        if len(row) != 3:
            raise ValueError(f"Row {index} of the square should have 3 observables. Got {len(row)}")
    tokens = lines[3].split()
    if len(tokens) != len(LINES) or any(token not in ('+', '-', '+1', '-1') for token in tokens):
        raise ValueError(f"Sign line should hold six signs among '+' and '-'. Got '{lines[3]}'")
    signs = [1 if token.startswith('+') else -1 for token in tokens]
    return PMSquare.from_text(grid, signs)

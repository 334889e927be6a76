"""
Parameters of the molecular spin Hamiltonian, all in kHz.

The parameter file is plain `key = value` text:

```
n_spins = 3
labels = C1, C2, Cm
omega_1 = 6.380     # chemical shifts
D_1_2 = 0.297       # dipolar, i < j
J_1_2 = -0.025      # scalar, i < j
```
Spins are numbered from 1 in the file, from 0 in the code.
"""
from __future__ import annotations
from dataclasses import dataclass, field
from itertools import combinations
import logging
import os
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..utils import LineParseError, parse_assignments

logger = logging.getLogger(__name__)

MAX_SPINS = 4
DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')
DEFAULT_PARAMS_FILE = os.path.join(DATA_DIR, 'malonic_acid.txt')

MALONIC_ACID_TABLE = ((6.380, 0.297, 0.780),
                      (-0.025, -1.533, 1.050),
                      (0.071, 0.042, -5.650))
MALONIC_ACID_LABELS = ('C1', 'C2', 'Cm')


def spin_pairs(n_spins: int) -> List[Tuple[int, int]]:
    """(0, 1), (0, 2), ..., (1, 2), ...: the order of D and J entries."""
    return list(combinations(range(n_spins), 2))


class ParamsFileError(ValueError):
    """Invalid parameter file. `line` is 1-based, None when the problem is a missing key."""

    def __init__(self, message: str, path: str, line: Optional[int] = None):
        location = path if line is None else f"{path}:{line}"
        super().__init__(f"{location}: {message}")
        self.path = path
        self.line = line


@dataclass(frozen=True)
class MolecularHamiltonianParams:
    n_spins: int
    omega: Tuple[float, ...]
    D: Tuple[float, ...]  # pylint: disable=invalid-name
    J: Tuple[float, ...]  # pylint: disable=invalid-name
    labels: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        if int(self.n_spins) != self.n_spins or not 1 <= self.n_spins <= MAX_SPINS:
            raise ValueError(f"n_spins should be an integer in [1, {MAX_SPINS}]. Got {self.n_spins}")
        n_pairs = self.n_spins * (self.n_spins - 1) // 2
        if len(self.omega) != self.n_spins:
            raise ValueError(f"Expected {self.n_spins} chemical shifts. Got {len(self.omega)}")
        if len(self.D) != n_pairs or len(self.J) != n_pairs:
            raise ValueError(f"Expected {n_pairs} dipolar and scalar couplings. "
                             f"Got {len(self.D)} and {len(self.J)}")
        labels = tuple(self.labels) or tuple(f"S{i + 1}" for i in range(self.n_spins))
        if len(labels) != self.n_spins:
            raise ValueError(f"Expected {self.n_spins} labels. Got {len(labels)}")
        object.__setattr__(self, 'n_spins', int(self.n_spins))
        object.__setattr__(self, 'omega', tuple(float(w) for w in self.omega))
        object.__setattr__(self, 'D', tuple(float(d) for d in self.D))
        object.__setattr__(self, 'J', tuple(float(j) for j in self.J))
        object.__setattr__(self, 'labels', labels)

    @classmethod
    def from_table(cls, table: Sequence[Sequence[float]], labels: Sequence[str] = ()) -> MolecularHamiltonianParams:
        """Diagonal: shifts; above the diagonal: D_ij; below: J_ij (stored at [j][i])."""
        matrix = np.asarray(table, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError(f"Parameter table should be square. Got shape {matrix.shape}")
        pairs = spin_pairs(matrix.shape[0])
        return cls(matrix.shape[0],
                   tuple(np.diag(matrix)),
                   tuple(matrix[i, j] for i, j in pairs),
                   tuple(matrix[j, i] for i, j in pairs),
                   tuple(labels))

    @classmethod
    def zeros(cls, n_spins: int) -> MolecularHamiltonianParams:
        return cls.from_table(np.zeros((n_spins, n_spins)))

    @property
    def pairs(self) -> List[Tuple[int, int]]:
        return spin_pairs(self.n_spins)

    def dipolar(self, i: int, j: int) -> float:
        return self.D[self.pairs.index((min(i, j), max(i, j)))]

    def scalar(self, i: int, j: int) -> float:
        return self.J[self.pairs.index((min(i, j), max(i, j)))]

    def as_table(self) -> np.ndarray:
        table = np.diag(self.omega)
        for (i, j), d, jc in zip(self.pairs, self.D, self.J):
            table[i, j], table[j, i] = d, jc
        return table

    def _asdict(self) -> dict:
        return {'omega': np.array(self.omega), 'D': np.array(self.D), 'J': np.array(self.J),
                'labels': np.array(self.labels, dtype='S')}


def malonic_acid() -> MolecularHamiltonianParams:
    return MolecularHamiltonianParams.from_table(MALONIC_ACID_TABLE, MALONIC_ACID_LABELS)


def format_params(params: MolecularHamiltonianParams) -> str:
    lines = [f"n_spins = {params.n_spins}", f"labels = {', '.join(params.labels)}"]
    lines += [f"omega_{i + 1} = {w!r}" for i, w in enumerate(params.omega)]
    lines += [f"D_{i + 1}_{j + 1} = {d!r}" for (i, j), d in zip(params.pairs, params.D)]
    lines += [f"J_{i + 1}_{j + 1} = {jc!r}" for (i, j), jc in zip(params.pairs, params.J)]
    return '\n'.join(lines) + '\n'


def _expected_keys(n_spins: int) -> List[str]:
    keys = [f"omega_{i + 1}" for i in range(n_spins)]
    for prefix in ('D', 'J'):
        keys += [f"{prefix}_{i + 1}_{j + 1}" for i, j in spin_pairs(n_spins)]
    return keys


def parse_params(text: str, path: str = '<string>') -> MolecularHamiltonianParams:
    try:
        assignments = parse_assignments(text)
    except LineParseError as error:
        raise ParamsFileError(error.reason, path, error.line) from None

    values: Dict[str, object] = {}
    lines: Dict[str, int] = {}
    for line, key, value in assignments:
        if key in values:
            raise ParamsFileError(f"'{key}' already set on line {lines[key]}", path, line)
        values[key], lines[key] = value, line

    if 'n_spins' not in values:
        raise ParamsFileError("missing 'n_spins'", path)
    n_spins = values.pop('n_spins')
    if not isinstance(n_spins, int) or not 1 <= n_spins <= MAX_SPINS:
        raise ParamsFileError(f"n_spins should be an integer in [1, {MAX_SPINS}]. Got '{n_spins}'",
                              path, lines['n_spins'])

    labels: Tuple[str, ...] = ()
    if 'labels' in values:
        labels = tuple(label.strip() for label in str(values.pop('labels')).split(','))
        if len(labels) != n_spins or not all(labels):
            raise ParamsFileError(f"expected {n_spins} comma separated labels", path, lines['labels'])

    expected = _expected_keys(n_spins)
    for key in values:
        if key not in expected:
            raise ParamsFileError(f"unknown key '{key}' for {n_spins} spins", path, lines[key])
    numbers = {}
    for key in expected:
        if key not in values:
            raise ParamsFileError(f"missing '{key}'", path)
        if not isinstance(values[key], (int, float)) or not np.isfinite(values[key]):
            raise ParamsFileError(f"'{key}' should be a number. Got '{values[key]}'", path, lines[key])
        numbers[key] = float(values[key])

    pairs = spin_pairs(n_spins)
    return MolecularHamiltonianParams(
        n_spins,
        tuple(numbers[f"omega_{i + 1}"] for i in range(n_spins)),
        tuple(numbers[f"D_{i + 1}_{j + 1}"] for i, j in pairs),
        tuple(numbers[f"J_{i + 1}_{j + 1}"] for i, j in pairs),
        labels)


def read_params_file(path: Optional[str] = None) -> MolecularHamiltonianParams:
    """Read a parameter file, the bundled malonic acid table by default.

    Raises ParamsFileError (a ValueError) naming the path and line, OSError if unreadable.
    """
    path = DEFAULT_PARAMS_FILE if path is None else str(path)
    with open(path, 'r', encoding='utf-8') as file:
        text = file.read()
    params = parse_params(text, path)
    logger.info("Loaded %d-spin parameters from %s", params.n_spins, path)
    return params

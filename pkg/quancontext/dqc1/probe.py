"""
Probe qubit preparation and controlled-observable gates.

The probe is always the leftmost tensor factor (qubit 0) of the register.
"""
from dataclasses import dataclass

import numpy as np

from ..linalg import ComplexMatrix, DensityMatrix, UnitaryMatrix, tensor
from ..pauli import PauliString, format_pauli, to_matrix

PLUS = np.array([1, 1], dtype=complex) / np.sqrt(2)
MINUS = np.array([1, -1], dtype=complex) / np.sqrt(2)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


@dataclass(frozen=True)
class ProbeSpec:
    """`epsilon` is both the probe purity and the readout efficiency."""
    epsilon: float = 1.0

    def __post_init__(self):
        if not 0 <= self.epsilon <= 1:
            raise ValueError(f"epsilon should be in [0, 1]. Got {self.epsilon}")
        object.__setattr__(self, 'epsilon', float(self.epsilon))


def probe_state(p: ProbeSpec) -> DensityMatrix:
    """(1 - epsilon) 1/2 + epsilon |+><+|."""
    return DensityMatrix.computed((1 - p.epsilon) * np.eye(2) / 2 + p.epsilon * np.outer(PLUS, PLUS.conj()))


def eigenprojectors(s: PauliString):
    """(P+, P-) = ((1 + S)/2, (1 - S)/2) for a Hermitian Pauli string S."""
    if not s.is_hermitian:
        raise ValueError(f"Observable {format_pauli(s)} is not Hermitian (phase +-i)")
    matrix = to_matrix(s)
    identity = np.eye(matrix.shape[0])
    return (identity + matrix) / 2, (identity - matrix) / 2


def controlled_observable(s: PauliString) -> UnitaryMatrix:
    """U_S = 1 (x) P+ + Z (x) P-, i.e. |0><0| (x) 1 + |1><1| (x) S."""
    p_plus, p_minus = eigenprojectors(s)
    return UnitaryMatrix(tensor(np.eye(2), p_plus) + tensor(PAULI_Z, p_minus))


def probe_x_observable(system_dim: int) -> ComplexMatrix:
    """X (x) 1_d, read out on the probe."""
    return tensor(PAULI_X, np.eye(system_dim))


def x_basis_projectors():
    """|+><+| and |-><-| of the probe."""
    return np.outer(PLUS, PLUS.conj()), np.outer(MINUS, MINUS.conj())

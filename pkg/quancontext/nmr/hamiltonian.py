"""
Internal Hamiltonian of the coupled spins, in rad/ms for parameters in kHz.

    H = sum_i pi w_i Z_i
        + sum_{i<j} pi D_ij (2 Z_i Z_j - X_i X_j - Y_i Y_j)
        + sum_{i<j} pi/2 J_ij (Z_i Z_j + X_i X_j + Y_i Y_j)

Spin 0 is the most significant qubit.
"""
import numpy as np

from ..linalg import ComplexMatrix, DensityMatrix, apply_unitary, expm_hermitian
from ..pauli import PauliString, parse_pauli, single_qubit_operator, to_matrix
from .params import MolecularHamiltonianParams


def pair_operator(letter: str, i: int, j: int, n: int) -> PauliString:
    """`letter` on spins i and j, identity elsewhere."""
    if i == j:
        raise ValueError(f"Spins of a pair should differ. Got {i} twice")
    letters = ['1'] * n
    for spin in (i, j):
        if not 0 <= spin < n:
            raise ValueError(f"Spin {spin} out of range for {n} spins")
        letters[spin] = letter
    return parse_pauli(''.join(letters))


def zeeman_term(params: MolecularHamiltonianParams) -> ComplexMatrix:
    n = params.n_spins
    return sum(np.pi * w * to_matrix(single_qubit_operator('Z', i, n)) for i, w in enumerate(params.omega))


def dipolar_term(params: MolecularHamiltonianParams) -> ComplexMatrix:
    n = params.n_spins
    term = np.zeros((2 ** n, 2 ** n), dtype=complex)
    for (i, j), d in zip(params.pairs, params.D):
        zz, xx, yy = (to_matrix(pair_operator(letter, i, j, n)) for letter in 'ZXY')
        term += np.pi * d * (2 * zz - xx - yy)
    return term


def scalar_term(params: MolecularHamiltonianParams) -> ComplexMatrix:
    n = params.n_spins
    term = np.zeros((2 ** n, 2 ** n), dtype=complex)
    for (i, j), jc in zip(params.pairs, params.J):
        zz, xx, yy = (to_matrix(pair_operator(letter, i, j, n)) for letter in 'ZXY')
        term += np.pi / 2 * jc * (zz + xx + yy)
    return term


def build_hamiltonian(params: MolecularHamiltonianParams) -> ComplexMatrix:
    h = zeeman_term(params) + dipolar_term(params) + scalar_term(params)
    return (h + h.conj().T) / 2


def free_evolution(rho: DensityMatrix, h: ComplexMatrix, t: float) -> DensityMatrix:
    """exp(-i h t) rho exp(i h t), t in ms."""
    h = np.asarray(h)
    if h.shape != rho.matrix.shape:
        raise ValueError(f"Hamiltonian shape {h.shape} does not match state dimension {rho.dim}")
    return apply_unitary(rho, expm_hermitian(h, t))

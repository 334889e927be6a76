"""
Dense linear algebra on at most 4 qubits.

Basis ordering: qubit 0 is the leftmost tensor factor and the most significant
bit of the basis index.
"""
from functools import reduce
from typing import Iterable, List, Optional, Sequence

import numpy as np

from .matrices import (ComplexMatrix, DensityMatrix, MatrixLike, NumericalIntegrityError,
                       UnitaryMatrix, as_matrix, is_hermitian, is_square)
from .tolerance import atol_or_default


def tensor(a: MatrixLike, b: MatrixLike) -> ComplexMatrix:
    """Kronecker product, `a` is the leftmost factor."""
    return as_matrix(np.kron(as_matrix(a), as_matrix(b)))


def tensor_all(matrices: Iterable[MatrixLike]) -> ComplexMatrix:
    return reduce(tensor, matrices)


def partial_trace(m: MatrixLike, dims: Sequence[int], keep: Iterable[int]) -> ComplexMatrix:
    """Trace out every subsystem not listed in `keep`.

    Subsystems keep their original order in the result.
    ```
    partial_trace(rho_bell, [2, 2], keep=[0])  # -> eye(2) / 2
    ```
    """
    matrix = as_matrix(m)
    dims = [int(d) for d in dims]
    keep = sorted(set(keep))
    if not is_square(matrix):
        raise ValueError(f"partial_trace needs a square matrix. Got shape {matrix.shape}")
    if any(d < 1 for d in dims) or int(np.prod(dims)) != matrix.shape[0]:
        raise ValueError(f"Subsystem dimensions {dims} do not match matrix dimension {matrix.shape[0]}")
    if not keep:
        raise ValueError("At least one subsystem should be kept")
    if keep[0] < 0 or keep[-1] >= len(dims):
        raise ValueError(f"Subsystem indices {keep} out of range for {len(dims)} subsystems")

    n = len(dims)
    tensor_form = matrix.reshape(dims + dims)
    traced = [i for i in range(n) if i not in keep]
    # einsum labels: row index i, column index n+i; traced subsystems share a label
    row_labels = list(range(n))
    col_labels = [i if i in traced else n + i for i in range(n)]
    out_labels = [i for i in keep] + [n + i for i in keep]
    reduced = np.einsum(tensor_form, row_labels + col_labels, out_labels)
    kept_dim = int(np.prod([dims[i] for i in keep]))
    return as_matrix(reduced.reshape(kept_dim, kept_dim))


def expectation(rho: DensityMatrix, obs: MatrixLike, atol: Optional[float] = None) -> float:
    """Re tr(rho obs) for a Hermitian observable."""
    obs = as_matrix(obs)
    atol = atol_or_default(atol)
    if obs.shape != rho.matrix.shape:
        raise ValueError(f"Observable shape {obs.shape} does not match state dimension {rho.dim}")
    if not is_hermitian(obs, atol):
        raise ValueError("Observable should be Hermitian")
    value = np.trace(rho.matrix @ obs)
    if abs(value.imag) > atol:
        raise NumericalIntegrityError(f"Expectation value has imaginary residue {value.imag:.3e}")
    return float(value.real)


def _hermitize(matrix: np.ndarray) -> np.ndarray:
    return (matrix + matrix.conj().T) / 2


def apply_unitary(rho: DensityMatrix, u: UnitaryMatrix) -> DensityMatrix:
    """U rho U^dagger."""
    if u.dim != rho.dim:
        raise ValueError(f"Unitary dimension {u.dim} does not match state dimension {rho.dim}")
    return DensityMatrix.computed(_hermitize(u.matrix @ rho.matrix @ u.matrix.conj().T))


def check_kraus_completeness(ops: Sequence[MatrixLike], atol: Optional[float] = None) -> List[ComplexMatrix]:
    """Return the operators as matrices, or raise if sum A^dagger A != 1."""
    matrices = [as_matrix(op) for op in ops]
    if not matrices:
        raise ValueError("Kraus set should not be empty")
    shape = matrices[0].shape
    if not is_square(matrices[0]) or any(op.shape != shape for op in matrices):
        raise ValueError("Kraus operators should be square and share one shape")
    completeness = sum(op.conj().T @ op for op in matrices)
    if not np.allclose(completeness, np.eye(shape[0]), rtol=0, atol=atol_or_default(atol)):
        raise ValueError("Kraus set is not complete (sum of A^dagger A differs from identity)")
    return matrices


def apply_kraus(rho: DensityMatrix, ops: Sequence[MatrixLike], atol: Optional[float] = None) -> DensityMatrix:
    """sum_k A_k rho A_k^dagger for a complete Kraus set."""
    matrices = check_kraus_completeness(ops, atol)
    if matrices[0].shape != rho.matrix.shape:
        raise ValueError(f"Kraus dimension {matrices[0].shape[0]} does not match state dimension {rho.dim}")
    result = sum(op @ rho.matrix @ op.conj().T for op in matrices)
    trace = np.trace(result).real
    if abs(trace - 1) > atol_or_default(atol):
        raise NumericalIntegrityError(f"Channel output has trace {trace:.12g}")
    return DensityMatrix.computed(_hermitize(result), atol=atol)


def expm_hermitian(h: MatrixLike, t: float) -> UnitaryMatrix:
    """exp(-i h t) through the eigendecomposition of h."""
    matrix = as_matrix(h)
    if not is_hermitian(matrix):
        raise ValueError("expm_hermitian needs a Hermitian matrix")
    eigenvalues, eigenvectors = np.linalg.eigh(_hermitize(matrix))
    return unitary_from_eigh(eigenvalues, eigenvectors, t)


def unitary_from_eigh(eigenvalues: np.ndarray, eigenvectors: np.ndarray, t: float) -> UnitaryMatrix:
    """exp(-i h t) from a cached eigendecomposition `h = V diag(w) V^dagger`."""
    phases = np.exp(-1j * eigenvalues * t)
    return UnitaryMatrix((eigenvectors * phases) @ eigenvectors.conj().T,
                         atol=atol_or_default(spectral=True))

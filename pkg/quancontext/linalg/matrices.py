"""
Validated, read-only matrix types.

`ComplexMatrix` is a plain complex `np.ndarray`; `DensityMatrix` and
`UnitaryMatrix` wrap one after checking their invariants. The wrapped arrays
are never writeable, so instances can be shared freely.
"""
from __future__ import annotations
from typing import Optional, Sequence, Union

import numpy as np

from .tolerance import atol_or_default

ComplexMatrix = np.ndarray
MatrixLike = Union[np.ndarray, Sequence[Sequence[complex]], 'DensityMatrix', 'UnitaryMatrix']

MAX_DIMENSION = 16


class NumericalIntegrityError(ArithmeticError):
    """Raised when a result violates a numerical contract beyond tolerance."""


def as_matrix(data: MatrixLike) -> ComplexMatrix:
    """Return a read-only complex 2d array from any matrix-like input."""
    if hasattr(data, 'asarray'):
        data = data.asarray()  # type: ignore
    matrix = np.array(data, dtype=complex)
    if matrix.ndim != 2:
        raise ValueError(f"Matrix should be 2-dimensional. Got shape {matrix.shape}")
    matrix.setflags(write=False)
    return matrix


def is_square(matrix: np.ndarray) -> bool:
    return matrix.ndim == 2 and matrix.shape[0] == matrix.shape[1]


def is_hermitian(matrix: np.ndarray, atol: Optional[float] = None) -> bool:
    return is_square(matrix) and np.allclose(matrix, matrix.conj().T, rtol=0, atol=atol_or_default(atol))


def is_unitary(matrix: np.ndarray, atol: Optional[float] = None) -> bool:
    if not is_square(matrix):
        return False
    return np.allclose(matrix @ matrix.conj().T, np.eye(matrix.shape[0]),
                       rtol=0, atol=atol_or_default(atol))


def matrices_close(a: MatrixLike, b: MatrixLike, atol: Optional[float] = None) -> bool:
    """Elementwise comparison with an absolute tolerance. Shapes must agree."""
    a, b = as_matrix(a), as_matrix(b)
    return a.shape == b.shape and np.allclose(a, b, rtol=0, atol=atol_or_default(atol))


def n_qubits_of(dim: int) -> int:
    n_qubits = int(dim).bit_length() - 1
    if dim < 1 or 2 ** n_qubits != dim:
        raise ValueError(f"Dimension {dim} is not a power of two")
    return n_qubits


class DensityMatrix:
    """Hermitian, unit-trace, positive semi-definite matrix.

    ```
    rho = DensityMatrix.maximally_mixed(4)
    rho = DensityMatrix.from_vector([1, 0, 0, 0])
    ```
    """
    __slots__ = ('_matrix',)

    def __init__(self, data: MatrixLike, atol: Optional[float] = None):
        matrix = as_matrix(data)
        atol = atol_or_default(atol)
        if not is_square(matrix):
            raise ValueError(f"Density matrix should be square. Got shape {matrix.shape}")
        if matrix.shape[0] > MAX_DIMENSION:
            raise ValueError(f"Dimension {matrix.shape[0]} exceeds the supported {MAX_DIMENSION}")
        if not is_hermitian(matrix, atol):
            raise ValueError("Density matrix should be Hermitian")
        trace = np.trace(matrix)
        if abs(trace - 1) > atol:
            raise ValueError(f"Density matrix should have unit trace. Got {trace.real:.17g}")
        min_eigenvalue = np.linalg.eigvalsh((matrix + matrix.conj().T) / 2).min()
        if min_eigenvalue < -max(atol, atol_or_default(spectral=True)):
            raise ValueError(f"Density matrix should be positive. Lowest eigenvalue is {min_eigenvalue:.3e}")
        self._matrix = matrix

    @classmethod
    def computed(cls, data: MatrixLike, atol: Optional[float] = None) -> DensityMatrix:
        """State produced by a computation: a broken invariant is a NumericalIntegrityError.

        Shape errors stay ValueError.
        """
        matrix = as_matrix(data)
        if not is_square(matrix) or matrix.shape[0] > MAX_DIMENSION:
            return cls(matrix, atol)
        try:
            return cls(matrix, atol)
        except ValueError as error:
            raise NumericalIntegrityError(f"Computed state is invalid: {error}") from None

    @classmethod
    def maximally_mixed(cls, dim: int) -> DensityMatrix:
        return cls(np.eye(dim) / dim)

    @classmethod
    def from_vector(cls, vector: Sequence[complex]) -> DensityMatrix:
        """Pure state |v><v| of a vector, normalized first."""
        vector = np.asarray(vector, dtype=complex).ravel()
        norm = np.linalg.norm(vector)
        if norm == 0:
            raise ValueError("Cannot build a state from the zero vector")
        vector = vector / norm
        return cls(np.outer(vector, vector.conj()))

    @property
    def matrix(self) -> ComplexMatrix:
        return self._matrix

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    @property
    def n_qubits(self) -> int:
        return n_qubits_of(self.dim)

    def asarray(self) -> np.ndarray:
        return self._matrix

    def __array__(self, dtype=None, copy=None):  # pylint: disable=unused-argument
        return np.array(self._matrix, dtype=dtype)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DensityMatrix):
            return NotImplemented
        return matrices_close(self, other)

    __hash__ = None  # type: ignore

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim})\n{np.array2string(self._matrix, precision=4)}"


class UnitaryMatrix:
    """Square matrix with U U^dagger = 1 within tolerance."""
    __slots__ = ('_matrix',)

    def __init__(self, data: MatrixLike, atol: Optional[float] = None):
        matrix = as_matrix(data)
        if not is_square(matrix):
            raise ValueError(f"Unitary should be square. Got shape {matrix.shape}")
        if not is_unitary(matrix, atol):
            raise ValueError("Matrix is not unitary")
        self._matrix = matrix

    @classmethod
    def identity(cls, dim: int) -> UnitaryMatrix:
        return cls(np.eye(dim))

    @property
    def matrix(self) -> ComplexMatrix:
        return self._matrix

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    def asarray(self) -> np.ndarray:
        return self._matrix

    def __array__(self, dtype=None, copy=None):  # pylint: disable=unused-argument
        return np.array(self._matrix, dtype=dtype)

    def __matmul__(self, other: UnitaryMatrix) -> UnitaryMatrix:
        if not isinstance(other, UnitaryMatrix):
            return NotImplemented
        return UnitaryMatrix(self._matrix @ other.matrix, atol=atol_or_default(spectral=True))

    def dagger(self) -> UnitaryMatrix:
        return UnitaryMatrix(self._matrix.conj().T)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnitaryMatrix):
            return NotImplemented
        return matrices_close(self, other)

    __hash__ = None  # type: ignore

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim})\n{np.array2string(self._matrix, precision=4)}"

from typing import List, Optional

import numpy as np

from .matrices import DensityMatrix, UnitaryMatrix


def _rng(rng: Optional[np.random.Generator]) -> np.random.Generator:
    return rng if rng is not None else np.random.default_rng()


def random_unitary(dim: int, rng: Optional[np.random.Generator] = None) -> UnitaryMatrix:
    """Haar-random unitary from the QR decomposition of a Ginibre matrix."""
    rng = _rng(rng)
    ginibre = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(ginibre)
    diagonal = np.diag(r)
    return UnitaryMatrix(q * (diagonal / np.abs(diagonal)))


def random_density_matrix(dim: int, rng: Optional[np.random.Generator] = None,
                          rank: Optional[int] = None) -> DensityMatrix:
    """Random mixed state G G^dagger / tr, G a dim x rank Ginibre matrix."""
    rng = _rng(rng)
    rank = rank or dim
    ginibre = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    matrix = ginibre @ ginibre.conj().T
    matrix = (matrix + matrix.conj().T) / 2
    return DensityMatrix.computed(matrix / np.trace(matrix).real)


def random_kraus(dim: int, n_ops: int, rng: Optional[np.random.Generator] = None) -> List[np.ndarray]:
    """Complete Kraus set cut from the columns of a random isometry."""
    rng = _rng(rng)
    unitary = random_unitary(dim * n_ops, rng).matrix
    isometry = unitary[:, :dim]
    return [isometry[k * dim:(k + 1) * dim, :] for k in range(n_ops)]

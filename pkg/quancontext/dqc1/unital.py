"""
epsilon-efficient readout versus a mixed probe.

An epsilon-efficient X measurement of Lambda(rho_a) gives the same statistics
as a faithful measurement of Lambda((1 - epsilon) 1/2 + epsilon rho_a) as long
as Lambda is unital. For a non-unital Lambda the two differ.
"""
from __future__ import annotations
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..linalg import (ComplexMatrix, DensityMatrix, apply_kraus, check_kraus_completeness,
                      random_density_matrix)
from ..linalg.tolerance import atol_or_default
from .probe import HADAMARD, PLUS, ProbeSpec, x_basis_projectors


@dataclass(frozen=True)
class UnitalReport:
    epsilon: float
    unital: bool
    discrepancies: Tuple[float, ...]
    atol: float

    @property
    def max_discrepancy(self) -> float:
        return max(self.discrepancies) if self.discrepancies else 0.0

    @property
    def equivalent(self) -> bool:
        return self.max_discrepancy <= self.atol


def _x_statistics(rho: DensityMatrix) -> np.ndarray:
    plus, minus = x_basis_projectors()
    return np.array([(plus @ rho.matrix).trace().real, (minus @ rho.matrix).trace().real])


def efficient_statistics(kraus: Sequence[ComplexMatrix], rho_a: DensityMatrix, epsilon: float) -> np.ndarray:
    """p(+-1) = (1 - epsilon)/2 + epsilon tr(|+-><+-| Lambda(rho_a))."""
    return (1 - epsilon) / 2 + epsilon * _x_statistics(apply_kraus(rho_a, kraus))


def mixed_probe_statistics(kraus: Sequence[ComplexMatrix], rho_a: DensityMatrix, epsilon: float) -> np.ndarray:
    """p(+-1) = tr(|+-><+-| Lambda((1 - epsilon) 1/2 + epsilon rho_a))."""
    mixed = DensityMatrix.computed((1 - epsilon) * np.eye(2) / 2 + epsilon * rho_a.matrix)
    return _x_statistics(apply_kraus(mixed, kraus))


def is_unital(kraus: Sequence[ComplexMatrix], atol: Optional[float] = None) -> bool:
    matrices = check_kraus_completeness(kraus, atol)
    image = sum(op @ op.conj().T for op in matrices) / matrices[0].shape[0]
    return bool(np.allclose(image, np.eye(matrices[0].shape[0]) / matrices[0].shape[0],
                            rtol=0, atol=atol_or_default(atol)))


def unital_equivalence_check(kraus: Sequence[ComplexMatrix], p: ProbeSpec, trials: int = 1,
                             rng: Optional[np.random.Generator] = None,
                             atol: Optional[float] = None) -> UnitalReport:
    """Compare both readout models for `trials` probe preparations.

    Trial 0 uses |+><+|, later trials use random pure states.
    """
    if trials < 1:
        raise ValueError(f"trials should be at least 1. Got {trials}")
    matrices = check_kraus_completeness(kraus, atol)
    if matrices[0].shape != (2, 2):
        raise ValueError(f"Probe map should act on one qubit. Got Kraus shape {matrices[0].shape}")
    rng = rng if rng is not None else np.random.default_rng(0)

    discrepancies = []
    for trial in range(trials):
        rho_a = DensityMatrix.from_vector(PLUS) if trial == 0 else random_density_matrix(2, rng, rank=1)
        efficient = efficient_statistics(matrices, rho_a, p.epsilon)
        mixed = mixed_probe_statistics(matrices, rho_a, p.epsilon)
        discrepancies.append(float(np.max(np.abs(efficient - mixed))))
    return UnitalReport(p.epsilon, is_unital(matrices, atol), tuple(discrepancies), atol_or_default(atol))


def relaxation_kraus(gamma: float) -> List[ComplexMatrix]:
    """Amplitude damping towards |+> with strength gamma. Non-unital for gamma > 0."""
    if not 0 <= gamma <= 1:
        raise ValueError(f"gamma should be in [0, 1]. Got {gamma}")
    a0 = np.array([[1, 0], [0, np.sqrt(1 - gamma)]], dtype=complex)
    a1 = np.array([[0, np.sqrt(gamma)], [0, 0]], dtype=complex)
    return [HADAMARD @ a @ HADAMARD for a in (a0, a1)]


def unitary_kraus(u) -> List[ComplexMatrix]:
    """Single-operator Kraus set of a unitary conjugation."""
    matrix = u.matrix if hasattr(u, 'matrix') else np.asarray(u, dtype=complex)
    return [matrix]

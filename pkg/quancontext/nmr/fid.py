"""
Free-induction decay from the eigendecomposition of the Hamiltonian.

The detected signal is s(t) = tr(rho(t) sum_i (X_i + i Y_i)) e^(-t/T2*).
In the eigenbasis of H every coherence rho_mn contributes a line at
(lambda_n - lambda_m) / 2 pi kHz, so a spin precessing at +w kHz gives a
peak at +w.
"""
from __future__ import annotations
from dataclasses import dataclass
import logging
from typing import List, NamedTuple, Optional, Sequence

import numpy as np

from ..linalg import ComplexMatrix, DensityMatrix, NumericalIntegrityError, is_hermitian
from ..linalg.tolerance import atol_or_default
from ..pauli import single_qubit_operator, to_matrix

logger = logging.getLogger(__name__)

DEFAULT_DWELL = 0.05  # ms, +-10 kHz bandwidth
DEFAULT_SAMPLES = 4096
DEFAULT_T2_STAR = 2.  # ms
LINE_MERGE_TOL = 1e-9  # kHz


class TransitionLine(NamedTuple):
    frequency: float  # kHz
    amplitude: complex


@dataclass(frozen=True)
class FidTrace:
    dwell_time: float
    samples: np.ndarray
    t2_star: float

    def __post_init__(self):
        if not self.dwell_time > 0:
            raise ValueError(f"Dwell time should be positive. Got {self.dwell_time}")
        samples = np.array(self.samples, dtype=complex).ravel()
        if samples.size == 0:
            raise ValueError("FID needs at least one sample")
        samples.setflags(write=False)
        object.__setattr__(self, 'samples', samples)

    @property
    def n_samples(self) -> int:
        return self.samples.size

    @property
    def times(self) -> np.ndarray:
        return np.arange(self.n_samples) * self.dwell_time

    def _asdict(self) -> dict:
        return {'dwell_time': self.dwell_time, 't2_star': self.t2_star,
                'real': self.samples.real, 'imag': self.samples.imag}


def _spins(n_spins: int, spins: Optional[Sequence[int]]) -> List[int]:
    spins = list(range(n_spins)) if spins is None else sorted(set(spins))
    if not spins or not all(0 <= spin < n_spins for spin in spins):
        raise ValueError(f"Spins should be a non-empty subset of 0..{n_spins - 1}. Got {spins}")
    return spins


def detection_operator(n_spins: int, spins: Optional[Sequence[int]] = None) -> ComplexMatrix:
    """sum_i (X_i + i Y_i) over the detected spins."""
    return sum(to_matrix(single_qubit_operator('X', i, n_spins))
               + 1j * to_matrix(single_qubit_operator('Y', i, n_spins))
               for i in _spins(n_spins, spins))


def transverse_state(n_spins: int, spins: Optional[Sequence[int]] = None) -> DensityMatrix:
    """(1 + mean_i X_i) / d over `spins`, all spins by default."""
    spins = _spins(n_spins, spins)
    dim = 2 ** n_spins
    deviation = sum(to_matrix(single_qubit_operator('X', i, n_spins)) for i in spins) / len(spins)
    return DensityMatrix.computed((np.eye(dim) + deviation) / dim)


def transition_lines(rho0: DensityMatrix, h: ComplexMatrix, spins: Optional[Sequence[int]] = None,
                     atol: Optional[float] = None) -> List[TransitionLine]:
    """Stick spectrum of rho0 under h, sorted by frequency.

    Lines closer than LINE_MERGE_TOL are merged and lines with a negligible
    amplitude dropped.
    """
    h = np.asarray(h, dtype=complex)
    if h.shape != rho0.matrix.shape:
        raise ValueError(f"Hamiltonian shape {h.shape} does not match state dimension {rho0.dim}")
    if not is_hermitian(h):
        raise ValueError("Hamiltonian should be Hermitian")
    atol = atol_or_default(atol)

    eigenvalues, eigenvectors = np.linalg.eigh((h + h.conj().T) / 2)
    rho_eig = eigenvectors.conj().T @ rho0.matrix @ eigenvectors
    detection_eig = eigenvectors.conj().T @ detection_operator(rho0.n_qubits, spins) @ eigenvectors

    amplitudes = rho_eig * detection_eig.T  # [m, n] = rho_mn D_nm
    frequencies = (eigenvalues[None, :] - eigenvalues[:, None]) / (2 * np.pi)

    order = np.argsort(frequencies, axis=None, kind='stable')
    lines: List[TransitionLine] = []
    for frequency, amplitude in zip(frequencies.ravel()[order], amplitudes.ravel()[order]):
        if lines and abs(frequency - lines[-1].frequency) < LINE_MERGE_TOL:
            lines[-1] = TransitionLine(lines[-1].frequency, lines[-1].amplitude + amplitude)
        else:
            lines.append(TransitionLine(float(frequency), complex(amplitude)))
    return [line for line in lines if abs(line.amplitude) > atol]


def fid_from_lines(lines: Sequence[TransitionLine], dwell: float, n_samples: int, t2_star: float) -> FidTrace:
    if not dwell > 0:
        raise ValueError(f"Dwell time should be positive. Got {dwell}")
    if not t2_star > 0:
        raise ValueError(f"T2* should be positive. Got {t2_star}")
    if n_samples < 2:
        raise ValueError(f"At least 2 samples are needed. Got {n_samples}")
    times = np.arange(n_samples) * dwell
    samples = np.zeros(n_samples, dtype=complex)
    for line in lines:
        samples += line.amplitude * np.exp(2j * np.pi * line.frequency * times)
    samples *= np.exp(-times / t2_star)
    if not np.all(np.isfinite(samples)):
        raise NumericalIntegrityError("FID contains non-finite samples")
    return FidTrace(dwell, samples, t2_star)


def simulate_fid(rho0: DensityMatrix, h: ComplexMatrix, dwell: float = DEFAULT_DWELL,
                 n_samples: int = DEFAULT_SAMPLES, t2_star: float = DEFAULT_T2_STAR,
                 spins: Optional[Sequence[int]] = None) -> FidTrace:
    """FID sampled every `dwell` ms, exact evolution at each sample time."""
    lines = transition_lines(rho0, h, spins)
    logger.debug("FID from %d transition lines, %d samples", len(lines), n_samples)
    return fid_from_lines(lines, dwell, n_samples, t2_star)

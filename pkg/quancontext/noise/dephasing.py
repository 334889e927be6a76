"""
Per-gate dephasing in the computational (Zeeman) basis.

    A0 = diag(1, sqrt(1 - eta)),  A1 = diag(0, sqrt(eta)),  eta = 1 - exp(-t / T2)

Off-diagonal elements of every qubit shrink by sqrt(1 - eta) per application.
"""
from __future__ import annotations
from dataclasses import dataclass
from itertools import product
from typing import List

import numpy as np

from ..linalg import ComplexMatrix, tensor_all


def dephasing_eta(t: float, t2: float) -> float:
    if not t2 > 0:
        raise ValueError(f"Dephasing time T2 should be positive. Got {t2}")
    if t < 0:
        raise ValueError(f"Pulse length t should not be negative. Got {t}")
    return float(-np.expm1(-t / t2))


def _check_eta(eta: float):
    if not 0 <= eta <= 1:
        raise ValueError(f"eta should be in [0, 1]. Got {eta}")


def dephasing_kraus(eta: float) -> List[ComplexMatrix]:
    _check_eta(eta)
    a0 = np.diag([1, np.sqrt(1 - eta)]).astype(complex)
    a1 = np.diag([0, np.sqrt(eta)]).astype(complex)
    return [a0, a1]


def n_fold_channel(eta: float, n_qubits: int) -> List[ComplexMatrix]:
    """Kraus set of the same dephasing map on each of `n_qubits` qubits (2**n operators)."""
    if n_qubits < 1:
        raise ValueError(f"n_qubits should be positive. Got {n_qubits}")
    single = dephasing_kraus(eta)
    return [tensor_all(ops) for ops in product(single, repeat=n_qubits)]


def three_fold_channel(eta: float) -> List[ComplexMatrix]:
    return n_fold_channel(eta, 3)


@dataclass(frozen=True)
class NoiseModel:
    """Dephasing after every controlled gate.

    `pulse_length_t` and `dephasing_time_T2` in ms. `gates_per_experiment`
    channel applications are spread over the gates of one experiment,
    one per gate by default.
    """
    pulse_length_t: float
    dephasing_time_T2: float  # pylint: disable=invalid-name
    gates_per_experiment: int = 3

    def __post_init__(self):
        dephasing_eta(self.pulse_length_t, self.dephasing_time_T2)
        if int(self.gates_per_experiment) != self.gates_per_experiment or self.gates_per_experiment < 1:
            raise ValueError(f"gates_per_experiment should be a positive integer. Got {self.gates_per_experiment}")
        object.__setattr__(self, 'gates_per_experiment', int(self.gates_per_experiment))

    @classmethod
    def from_ratio(cls, ratio: float, pulse_length_t: float = 1.5, gates_per_experiment: int = 3) -> NoiseModel:
        """Model with T2 = t / ratio."""
        if not ratio > 0:
            raise ValueError(f"Ratio t/T2 should be positive. Got {ratio}")
        return cls(pulse_length_t, pulse_length_t / ratio, gates_per_experiment)

    @property
    def eta(self) -> float:
        return dephasing_eta(self.pulse_length_t, self.dephasing_time_T2)

    @property
    def ratio(self) -> float:
        return self.pulse_length_t / self.dephasing_time_T2

    def channel(self, n_qubits: int = 3) -> List[ComplexMatrix]:
        return n_fold_channel(self.eta, n_qubits)

    def applications(self, n_gates: int) -> List[int]:
        """Channel applications after each of `n_gates` gates; earlier gates take the remainder."""
        if n_gates < 1:
            raise ValueError(f"n_gates should be positive. Got {n_gates}")
        base, extra = divmod(self.gates_per_experiment, n_gates)
        return [base + (1 if k < extra else 0) for k in range(n_gates)]

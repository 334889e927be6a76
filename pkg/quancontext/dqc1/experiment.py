"""
The probe-qubit correlation circuit: prepare probe (x) rho, apply one
controlled-observable gate per observable, read X on the probe.

    <X (x) 1_d> = epsilon * tr(rho * S_1 S_2 ... S_m)
"""
from __future__ import annotations
from dataclasses import dataclass
from itertools import combinations
import logging
from typing import Optional, Sequence, Tuple

from ..linalg import (DensityMatrix, NumericalIntegrityError, apply_kraus, apply_unitary,
                      check_kraus_completeness, expectation, partial_trace, tensor)
from ..pauli import PauliString, commutes, format_pauli
from .probe import (ProbeSpec, controlled_observable, probe_state, probe_x_observable,
                    x_basis_projectors)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorrelationExperiment:
    system_state: DensityMatrix
    observables: Tuple[PauliString, ...]
    probe: ProbeSpec = ProbeSpec()

    def __post_init__(self):
        observables = tuple(self.observables)
        object.__setattr__(self, 'observables', observables)
        for observable in observables:
            if 2 ** observable.n != self.system_state.dim:
                raise ValueError(f"Observable {format_pauli(observable)} acts on {observable.n} qubits "
                                 f"but the system has dimension {self.system_state.dim}")
        for a, b in combinations(observables, 2):
            if not commutes(a, b):
                raise ValueError(f"Observables {format_pauli(a)} and {format_pauli(b)} do not commute")

    @property
    def system_dim(self) -> int:
        return self.system_state.dim


def final_state(exp: CorrelationExperiment, noise=None) -> DensityMatrix:
    """State of probe (x) system after the circuit.

    `noise` is any object with `channel(n_qubits)` returning a Kraus set on the
    whole register and `applications(n_gates)` returning how many times the
    channel follows each gate (see `quancontext.noise.NoiseModel`).
    """
    state = DensityMatrix.computed(tensor(probe_state(exp.probe), exp.system_state))
    n_gates = len(exp.observables)
    if noise is not None and n_gates:
        try:
            channel = check_kraus_completeness(noise.channel(state.n_qubits))
        except ValueError as error:
            raise NumericalIntegrityError(f"Noise channel: {error}") from None
        applications = noise.applications(n_gates)
    else:
        channel, applications = None, [0] * n_gates

    for observable, n_applications in zip(exp.observables, applications):
        state = apply_unitary(state, controlled_observable(observable))
        for _ in range(n_applications):
            state = apply_kraus(state, channel)  # type: ignore
    return state


def measure_correlation(exp: CorrelationExperiment, noise=None) -> float:
    """<X (x) 1_d> on the final state."""
    state = final_state(exp, noise)
    value = expectation(state, probe_x_observable(exp.system_dim))
    logger.debug("Correlation of %s: %.12g",
                 ','.join(format_pauli(s) for s in exp.observables), value)
    return value


def outcome_probabilities(exp: CorrelationExperiment, noise=None) -> Tuple[float, float]:
    """Probabilities of the +1 and -1 outcomes of X on the probe.

    p(+-1) = (1 - epsilon)/2 + epsilon tr(P+- rho) for a single observable.
    """
    state = final_state(exp, noise)
    probe = partial_trace(state.matrix, [2, exp.system_dim], keep=[0])
    plus, minus = x_basis_projectors()
    p_plus = float((plus @ probe).trace().real)
    p_minus = float((minus @ probe).trace().real)
    return p_plus, p_minus


def reference_correlation(p: ProbeSpec, system_state: DensityMatrix) -> float:
    """Probe signal without any controlled gate, epsilon <1>_rho = epsilon.

    This reference fixes epsilon for the fair-sampling correction.
    """
    return measure_correlation(CorrelationExperiment(system_state, (), p))


def correlation_of(observables: Sequence[PauliString], system_state: DensityMatrix,
                   p: Optional[ProbeSpec] = None, noise=None) -> float:
    return measure_correlation(CorrelationExperiment(system_state, tuple(observables), p or ProbeSpec()), noise)

"""
The six experiments estimating beta: one correlation measurement per line of
the square, with the system in the maximally mixed state.
"""
from __future__ import annotations
from dataclasses import dataclass
import logging
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..contextuality import LINES, PMSquare, pm_square
from ..linalg import DensityMatrix
from ..utils import format_float
from .experiment import CorrelationExperiment, measure_correlation, reference_correlation
from .probe import ProbeSpec

logger = logging.getLogger(__name__)

SUITE_CSV_HEADER = ('line', 'raw_correlation', 'epsilon', 'corrected_correlation', 'sign', 'contribution')


class EpsilonCorrectionError(ZeroDivisionError):
    """The fair-sampling correction divides by epsilon, impossible for epsilon = 0."""


@dataclass(frozen=True)
class SuiteTerm:
    line: str
    raw_correlation: float
    epsilon: float
    corrected_correlation: Optional[float]
    sign: int

    @property
    def value(self) -> float:
        return self.raw_correlation if self.corrected_correlation is None else self.corrected_correlation

    @property
    def contribution(self) -> float:
        return self.sign * self.value


@dataclass(frozen=True)
class SuiteResult:
    epsilon: float
    terms: Tuple[SuiteTerm, ...]
    reference: float
    corrected: bool

    @property
    def beta(self) -> float:
        return float(sum(term.contribution for term in self.terms))

    @property
    def values(self) -> Dict[str, float]:
        return {term.line: term.value for term in self.terms}

    @property
    def scaled_to_reference(self) -> Optional[float]:
        """Signed sum of the raw signals over 6 times the reference signal."""
        if self.reference == 0:
            return None
        return float(sum(term.sign * term.raw_correlation for term in self.terms)) / (6 * self.reference)

    def term(self, line: str) -> SuiteTerm:
        for term in self.terms:
            if term.line == line:
                return term
        raise ValueError(f"No term for line '{line}'")

    def csv_rows(self) -> List[List[str]]:
        rows = [[term.line,
                 format_float(term.raw_correlation),
                 format_float(term.epsilon),
                 '' if term.corrected_correlation is None else format_float(term.corrected_correlation),
                 str(term.sign),
                 format_float(term.contribution)] for term in self.terms]
        rows.append(['beta', '', '', '', '', format_float(self.beta)])
        return rows

    def _asdict(self) -> dict:
        return {
            'line': np.array([term.line for term in self.terms], dtype='S'),
            'raw_correlation': np.array([term.raw_correlation for term in self.terms]),
            'corrected_correlation': np.array([np.nan if term.corrected_correlation is None
                                               else term.corrected_correlation for term in self.terms]),
            'sign': np.array([term.sign for term in self.terms]),
            'epsilon': self.epsilon,
            'reference': self.reference,
            'beta': self.beta,
        }


def run_experiment_suite(p: ProbeSpec, noise=None, correction: bool = True,
                         sq: Optional[PMSquare] = None,
                         system_state: Optional[DensityMatrix] = None) -> SuiteResult:
    """Run the six line experiments, fixed order r1, r2, r3, c1, c2, c3.

    With `correction`, every term is divided by epsilon (fair sampling).
    `noise` is a `quancontext.noise.NoiseModel` applied after each gate.
    """
    sq = sq or pm_square()
    if correction and p.epsilon == 0:
        raise EpsilonCorrectionError("Cannot correct for epsilon = 0. Disable the epsilon correction")
    if system_state is None:
        system_state = DensityMatrix.maximally_mixed(2 ** sq.n_qubits)

    terms = []
    for line in LINES:
        raw = measure_correlation(CorrelationExperiment(system_state, tuple(sq.observables(line)), p), noise)
        corrected = raw / p.epsilon if correction else None
        terms.append(SuiteTerm(line, raw, p.epsilon, corrected, sq.sign(line)))
        logger.debug("Line %s: raw %.12g", line, raw)

    result = SuiteResult(p.epsilon, tuple(terms), reference_correlation(p, system_state), correction)
    logger.info("Suite with epsilon=%g: beta=%.6f", p.epsilon, result.beta)
    return result

"""
beta of the noisy six-experiment suite as a function of t / T2.
"""
from __future__ import annotations
from dataclasses import dataclass
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..contextuality import LINES
from ..dqc1 import ProbeSpec, run_experiment_suite
from ..utils import format_float
from .dephasing import NoiseModel

logger = logging.getLogger(__name__)

SWEEP_CSV_HEADER = ('ratio_t_over_T2', 'eta') + tuple(f'beta_{line}' for line in LINES) + ('beta_total',)
DEFAULT_RATIOS = tuple(np.geomspace(0.01, 2, 50))


def noisy_suite_beta(model: NoiseModel, p: Optional[ProbeSpec] = None) -> float:
    """epsilon-corrected beta of the suite with `model` applied after each gate."""
    return run_experiment_suite(p or ProbeSpec(), noise=model).beta


@dataclass(frozen=True)
class SweepPoint:
    ratio: float
    eta: float
    terms: Tuple[float, ...]  # epsilon-corrected line values in LINES order
    beta: float


@dataclass(frozen=True)
class SweepSeries:
    points: Tuple[SweepPoint, ...]

    def __post_init__(self):
        ratios = [point.ratio for point in self.points]
        if any(b <= a for a, b in zip(ratios, ratios[1:])):
            raise ValueError("Sweep ratios should be strictly increasing")

    @property
    def ratios(self) -> np.ndarray:
        return np.array([point.ratio for point in self.points])

    @property
    def betas(self) -> np.ndarray:
        return np.array([point.beta for point in self.points])

    def beta_at(self, ratio: float, rtol: float = 1e-9) -> Optional[float]:
        for point in self.points:
            if np.isclose(point.ratio, ratio, rtol=rtol, atol=0):
                return point.beta
        return None

    def csv_rows(self) -> List[List[str]]:
        return [[format_float(point.ratio), format_float(point.eta)]
                + [format_float(term) for term in point.terms]
                + [format_float(point.beta)] for point in self.points]

    def _asdict(self) -> Dict[str, np.ndarray]:
        terms = np.array([point.terms for point in self.points]).reshape(len(self.points), len(LINES))
        data = {'ratio_t_over_T2': self.ratios,
                'eta': np.array([point.eta for point in self.points]),
                'beta_total': self.betas}
        data.update({f'beta_{line}': terms[:, index] for index, line in enumerate(LINES)})
        return data


def beta_sweep(t: float = 1.5, ratios: Sequence[float] = DEFAULT_RATIOS,
               p: Optional[ProbeSpec] = None, gates: int = 3) -> SweepSeries:
    """Noisy suite beta for T2 = t / ratio at every ratio."""
    ratios = [float(r) for r in ratios]
    if not ratios:
        raise ValueError("At least one ratio is needed")
    if any(r <= 0 for r in ratios):
        raise ValueError("Ratios t/T2 should be positive")
    if any(b <= a for a, b in zip(ratios, ratios[1:])):
        raise ValueError("Ratios should be sorted in strictly increasing order")
    p = p or ProbeSpec()

    points = []
    for index, ratio in enumerate(ratios):
        model = NoiseModel.from_ratio(ratio, pulse_length_t=t, gates_per_experiment=gates)
        result = run_experiment_suite(p, noise=model)
        points.append(SweepPoint(ratio, model.eta, tuple(result.values[line] for line in LINES), result.beta))
        logger.debug("Sweep point %d/%d: ratio=%.6g beta=%.6f", index + 1, len(ratios), ratio, result.beta)
    logger.info("Sweep of %d ratios done, beta from %.6f to %.6f", len(points), points[0].beta, points[-1].beta)
    return SweepSeries(tuple(points))

"""
Spectrum of an FID, peak picking and spin cluster centers.
"""
from __future__ import annotations
from dataclasses import dataclass
import logging
from typing import List, NamedTuple, Sequence

import numpy as np

from ..utils import format_float
from .fid import (DEFAULT_DWELL, DEFAULT_SAMPLES, DEFAULT_T2_STAR, FidTrace, fid_from_lines,
                  transition_lines, transverse_state)
from .hamiltonian import build_hamiltonian
from .params import MolecularHamiltonianParams

logger = logging.getLogger(__name__)

SPECTRUM_CSV_HEADER = ('frequency_khz', 'real', 'imag', 'magnitude')
PEAK_MODES = ('real', 'magnitude')


@dataclass(frozen=True)
class Spectrum:
    frequencies: np.ndarray  # kHz, increasing
    values: np.ndarray

    @property
    def bin_width(self) -> float:
        return float(self.frequencies[1] - self.frequencies[0]) if self.frequencies.size > 1 else 0.

    @property
    def magnitude(self) -> np.ndarray:
        return np.abs(self.values)

    def csv_rows(self) -> List[List[str]]:
        return [[format_float(f), format_float(v.real), format_float(v.imag), format_float(abs(v))]
                for f, v in zip(self.frequencies, self.values)]

    def _asdict(self) -> dict:
        return {'frequency_khz': self.frequencies, 'real': self.values.real,
                'imag': self.values.imag, 'magnitude': self.magnitude}


def spectrum(fid: FidTrace) -> Spectrum:
    """Unnormalized DFT, zero frequency centered: sum |fid|^2 = sum |spectrum|^2 / n."""
    n = fid.n_samples
    return Spectrum(np.fft.fftshift(np.fft.fftfreq(n, fid.dwell_time)),
                    np.fft.fftshift(np.fft.fft(fid.samples)))


class Peak(NamedTuple):
    frequency: float
    height: float
    index: int


def smooth(signal: np.ndarray, width: int) -> np.ndarray:
    """Moving average over `width` bins (odd), same length."""
    if width <= 1:
        return signal
    if width % 2 == 0:
        raise ValueError(f"Smoothing width should be odd. Got {width}")
    return np.convolve(signal, np.ones(width) / width, mode='same')


def find_peaks(spec: Spectrum, mode: str = 'real', smoothing: int = 1, rel_height: float = 0.05) -> List[Peak]:
    """Local maxima of the absorption (`real`) or `magnitude` spectrum.

    Peaks lower than `rel_height` times the highest point are ignored.
    """
    if mode not in PEAK_MODES:
        raise ValueError(f"Peak mode should be one of {PEAK_MODES}. Got '{mode}'")
    if not 0 <= rel_height < 1:
        raise ValueError(f"rel_height should be in [0, 1). Got {rel_height}")
    signal = smooth(spec.values.real if mode == 'real' else spec.magnitude, smoothing)
    if signal.size < 3 or signal.max() <= 0:
        return []

    threshold = rel_height * signal.max()
    inner = signal[1:-1]
    is_peak = (inner > signal[:-2]) & (inner >= signal[2:]) & (inner > threshold)
    return [Peak(float(spec.frequencies[k + 1]), float(signal[k + 1]), int(k + 1))
            for k in np.flatnonzero(is_peak)]


class ClusterCenter(NamedTuple):
    label: str
    shift: float  # chemical shift of the spin, kHz
    center: float  # kHz
    n_lines: int


def cluster_center(params: MolecularHamiltonianParams, spin: int, dwell: float = DEFAULT_DWELL,
                   n_samples: int = DEFAULT_SAMPLES, t2_star: float = DEFAULT_T2_STAR) -> ClusterCenter:
    """Center of the line cluster of one spin, read from its spectrum.

    Only `spin` is excited and detected. Each transition line is moved to the
    absorption peak within one bin of it when there is one, and the center is
    the centroid of those positions weighted by the line absorption.
    """
    h = build_hamiltonian(params)
    lines = transition_lines(transverse_state(params.n_spins, [spin]), h, [spin])
    spec = spectrum(fid_from_lines(lines, dwell, n_samples, t2_star))
    peaks = np.array([peak.frequency for peak in find_peaks(spec, 'real')])

    positions, weights = [], []
    for line in lines:
        position = line.frequency
        if peaks.size:
            nearest = peaks[np.argmin(np.abs(peaks - line.frequency))]
            if abs(nearest - line.frequency) <= spec.bin_width:
                position = nearest
        positions.append(position)
        weights.append(line.amplitude.real)

    total = float(np.sum(weights))
    if total <= 0:
        raise ValueError(f"Spin {params.labels[spin]} gives no absorption signal")
    center = float(np.dot(weights, positions)) / total
    logger.debug("Spin %s: %d lines, center %.6f kHz", params.labels[spin], len(lines), center)
    return ClusterCenter(params.labels[spin], params.omega[spin], center, len(lines))


def cluster_centers(params: MolecularHamiltonianParams, dwell: float = DEFAULT_DWELL,
                    n_samples: int = DEFAULT_SAMPLES,
                    t2_star: float = DEFAULT_T2_STAR) -> List[ClusterCenter]:
    return [cluster_center(params, spin, dwell, n_samples, t2_star) for spin in range(params.n_spins)]


def merge_clusters(centers: Sequence[ClusterCenter], tol: float) -> List[ClusterCenter]:
    """Join centers closer than `tol` kHz, kept in the order of their first spin.

    Labels are joined with '+', shift and center averaged with the number of lines as weight.
    """
    merged: List[List[ClusterCenter]] = []
    for center in sorted(centers, key=lambda c: c.center):
        if merged and center.center - merged[-1][-1].center <= tol:
            merged[-1].append(center)
        else:
            merged.append([center])
    order = {id(center): k for k, center in enumerate(centers)}
    merged.sort(key=lambda group: min(order[id(c)] for c in group))

    result = []
    for group in merged:
        group.sort(key=lambda c: order[id(c)])
        weights = np.array([c.n_lines for c in group], dtype=float)
        if weights.sum() <= 0:
            weights = np.ones(len(group))
        result.append(ClusterCenter('+'.join(c.label for c in group),
                                    float(np.average([c.shift for c in group], weights=weights)),
                                    float(np.average([c.center for c in group], weights=weights)),
                                    sum(c.n_lines for c in group)))
    if len(result) < len(centers):
        logger.info("Merged %d cluster centers into %d", len(centers), len(result))
    return result


def molecule_spectrum(params: MolecularHamiltonianParams, dwell: float = DEFAULT_DWELL,
                      n_samples: int = DEFAULT_SAMPLES, t2_star: float = DEFAULT_T2_STAR,
                      rho0=None) -> Spectrum:
    """Spectrum after transverse excitation of all spins, unless `rho0` is given."""
    rho0 = rho0 if rho0 is not None else transverse_state(params.n_spins)
    return spectrum(fid_from_lines(transition_lines(rho0, build_hamiltonian(params)),
                                   dwell, n_samples, t2_star))

"""Occupation probabilities, l1-coherence and Shannon entropy of walker states."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

import numpy as np

from .lattice import LatticeSpec

DENSE_MAX_SITES = 4096


def probability_distribution(psi: np.ndarray) -> np.ndarray:
    return np.abs(psi) ** 2


def coherence_pure(psi: np.ndarray) -> float:
    r"""l1-norm coherence of the pure state ``|psi><psi|``.

    For a pure state :math:`\sum_{n,m} |\psi_n \psi_m^*| = (\sum_n |\psi_n|)^2`,
    so the double sum collapses to a single O(N) pass.
    """
    s = np.sum(np.abs(psi))
    return float(s * s - 1.0)


def coherence_dense(rho: np.ndarray) -> float:
    """Sum of the absolute values of all density-matrix entries, minus one."""
    rho = np.asarray(rho)
    if rho.shape[0] > DENSE_MAX_SITES:
        raise ValueError(f"dense coherence is capped at {DENSE_MAX_SITES} sites")
    return float(np.sum(np.abs(rho)) - 1.0)


def shannon_entropy(p: np.ndarray) -> float:
    """Base-2 Shannon entropy with the convention ``0 log 0 = 0``."""
    p = np.asarray(p, dtype=float)
    if np.any(p < 0):
        raise ValueError("probabilities must be non-negative")
    nz = p[p > 0]
    return float(0.0 - np.sum(nz * np.log2(nz)))


def max_coherence(d: int) -> float:
    """Coherence of the uniform superposition on d**2 sites."""
    return float(d * d - 1)


def max_entropy(d: int) -> float:
    return 2.0 * math.log2(d)


@dataclass
class MetricRecord:
    step: int
    entropy: float
    coherence: Optional[float] = None
    distribution: Optional[np.ndarray] = None


MetricSink = Callable[[MetricRecord], None]


@dataclass
class MetricSeries:
    spec: LatticeSpec
    kind: str
    records: list[MetricRecord] = field(default_factory=list)
    normalized: bool = False
    max_norm_drift: float = 0.0

    def append(self, rec: MetricRecord):
        if self.records and rec.step <= self.records[-1].step:
            raise ValueError("steps must be strictly increasing")
        self.records.append(rec)

    def __len__(self):
        return len(self.records)

    @property
    def label(self) -> str:
        return self.spec.label

    @property
    def steps(self) -> np.ndarray:
        return np.array([r.step for r in self.records], dtype=np.int64)

    @property
    def entropy(self) -> np.ndarray:
        return np.array([r.entropy for r in self.records])

    @property
    def coherence(self) -> np.ndarray:
        return np.array([np.nan if r.coherence is None else r.coherence for r in self.records])

    def has_coherence(self) -> bool:
        return any(r.coherence is not None for r in self.records)


def normalize_series(s: MetricSeries) -> MetricSeries:
    """Divide coherence by d**2 - 1 and entropy by 2 log2 d."""
    if s.normalized:
        return s
    cmax, emax = max_coherence(s.spec.d), max_entropy(s.spec.d)
    recs = [
        replace(
            r,
            entropy=r.entropy / emax,
            coherence=None if r.coherence is None else r.coherence / cmax,
        )
        for r in s.records
    ]
    return replace(s, records=recs, normalized=True)

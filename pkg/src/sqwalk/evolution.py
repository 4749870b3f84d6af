"""Staggered, Trotterized continuous-time and classical walk dynamics.

Every Hamiltonian of a step is a matching, so its propagator is block
diagonal with 2x2 blocks.  A sub-step therefore costs one gather and one
axpy over the N = d**2 amplitudes instead of a dense N x N product.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .lattice import LatticeSpec
from .metrics import (
    MetricRecord,
    MetricSeries,
    MetricSink,
    coherence_pure,
    probability_distribution,
    shannon_entropy,
)
from .tessellation import Matching, StaggeredSet, build_staggered_set

log = logging.getLogger(__name__)

DEFAULT_ORDER = (1, 3, 2, 4)


class NormDriftError(RuntimeError):
    """Raised when a run leaves the probability simplex beyond tolerance."""


@dataclass(frozen=True)
class StepParams:
    kappa_tau: float
    omega_tau: float = 0.0
    order: tuple[int, ...] = DEFAULT_ORDER

    def __post_init__(self):
        order = tuple(int(k) for k in self.order)
        if sorted(order) != [1, 2, 3, 4]:
            raise ValueError(f"order must be a permutation of (1, 2, 3, 4), got {self.order}")
        object.__setattr__(self, "order", order)

    @classmethod
    def from_spec(cls, spec: LatticeSpec, order: Sequence[int] = DEFAULT_ORDER) -> "StepParams":
        return cls(spec.kappa_tau, spec.omega_tau, tuple(order))


def block_unitary(kappa_tau: float, omega_tau: float) -> np.ndarray:
    """Propagator of one coupled pair over a sub-step."""
    c, s = math.cos(kappa_tau), math.sin(kappa_tau)
    return np.exp(-1j * omega_tau) * np.array([[c, 1j * s], [1j * s, c]])


def stochastic_block(kappa_tau: float) -> np.ndarray:
    """Classical limit of :func:`block_unitary`: squared moduli of its entries.

    The larger of cos^2 and sin^2 is evaluated directly and the other one
    as its complement, which keeps every row and column summing to exactly
    1.0 in floating point.
    """
    c2 = math.cos(kappa_tau) ** 2
    if c2 >= 0.5:
        s2 = 1.0 - c2
    else:
        s2 = math.sin(kappa_tau) ** 2
        c2 = 1.0 - s2
    return np.array([[c2, s2], [s2, c2]])


class _Substep:
    """Precomputed coefficients for ``out = diag * x + off * x[partner]``."""

    __slots__ = ("partner", "diag", "off")

    def __init__(self, m: Matching, diag: complex | float, off: complex | float, single: complex | float):
        self.partner = m.partner
        if m.is_perfect:
            self.diag, self.off = diag, off
        else:
            self.diag = np.where(m.paired, diag, single)
            self.off = np.where(m.paired, off, 0.0)

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return self.diag * x + self.off * x[self.partner]


def _quantum_substep(m: Matching, p: StepParams) -> _Substep:
    phase = np.exp(-1j * p.omega_tau)
    c, s = math.cos(p.kappa_tau), math.sin(p.kappa_tau)
    return _Substep(m, phase * c, phase * 1j * s, phase)


def apply_matching(psi: np.ndarray, m: Matching, p: StepParams) -> np.ndarray:
    """Apply ``exp(-i tau H)`` for the matching Hamiltonian ``H`` to ``psi``."""
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (m.n_sites,):
        raise ValueError(f"state has shape {psi.shape}, matching acts on {m.n_sites} sites")
    return _quantum_substep(m, p)(psi)


class SQWStep:
    """One full step: the four matching propagators applied in ``p.order``."""

    def __init__(self, sset: StaggeredSet, p: StepParams):
        self.n_sites = sset.spec.n_sites
        self.params = p
        self._subs = [_quantum_substep(sset[k - 1], p) for k in p.order]

    def __call__(self, psi: np.ndarray) -> np.ndarray:
        for sub in self._subs:
            psi = sub(psi)
        return psi


def sqw_step(psi: np.ndarray, sset: StaggeredSet, p: StepParams) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (sset.spec.n_sites,):
        raise ValueError(f"state has shape {psi.shape}, lattice has {sset.spec.n_sites} sites")
    return SQWStep(sset, p)(psi)


def basis_state(n_sites: int, site: int) -> np.ndarray:
    """Walker localized at the 1-based ``site``."""
    if not 1 <= site <= n_sites:
        raise ValueError(f"site {site} outside 1..{n_sites}")
    psi = np.zeros(n_sites, dtype=complex)
    psi[site - 1] = 1.0
    return psi


def _quantum_record(step, psi, record_distribution):
    p = probability_distribution(psi)
    return MetricRecord(
        step=step,
        entropy=shannon_entropy(p),
        coherence=coherence_pure(psi),
        distribution=p if record_distribution else None,
    )


def _check_run_args(steps: int, sample_every: int):
    if sample_every < 1:
        raise ValueError("sample_every must be >= 1")
    if steps < 0:
        raise ValueError("steps must be >= 0")


def run_sqw(
    spec: LatticeSpec,
    steps: int,
    initial: Optional[int] = None,
    sink: Optional[MetricSink] = None,
    *,
    order: Sequence[int] = DEFAULT_ORDER,
    sample_every: int = 1,
    record_distribution: bool = False,
    norm_tol: float = 1e-6,
    kind: str = "sqw",
) -> MetricSeries:
    """Evolve a localized walker for ``steps`` full steps and record metrics.

    Step 0 is the initial state.  Records are taken every ``sample_every``
    steps and at the last step.  The norm is checked at each record and a
    :class:`NormDriftError` is raised once it drifts by more than ``norm_tol``.
    """
    _check_run_args(steps, sample_every)
    sset = build_staggered_set(spec)
    step = SQWStep(sset, StepParams.from_spec(spec, order))
    psi = basis_state(spec.n_sites, spec.center if initial is None else initial)
    series = MetricSeries(spec, kind)

    def emit(l):
        drift = abs(float(np.vdot(psi, psi).real) - 1.0)
        series.max_norm_drift = max(series.max_norm_drift, drift)
        if drift > norm_tol:
            raise NormDriftError(f"norm drifted by {drift:.3e} at step {l}")
        rec = _quantum_record(l, psi, record_distribution)
        series.append(rec)
        if sink is not None:
            sink(rec)

    emit(0)
    for l in range(1, steps + 1):
        psi = step(psi)
        if l % sample_every == 0 or l == steps:
            emit(l)
    log.debug("%s %s d=%d: %d steps, norm drift %.2e", kind, spec.label, spec.d, steps, series.max_norm_drift)
    return series


def run_ctqw(
    spec: LatticeSpec,
    L: int,
    initial: Optional[int] = None,
    sink: Optional[MetricSink] = None,
    *,
    sample_every: int = 1000,
    **kwargs,
) -> MetricSeries:
    """Continuous-time walk approximated by ``L`` staggered steps.

    ``spec.kappa_tau`` must hold the Trotter slice ``kappa * t / L``.  The
    summed Hamiltonian carries four times the on-site frequency of a direct
    CTQW construction; at resonance that only shifts the global phase.
    """
    return run_sqw(spec, L, initial, sink, sample_every=sample_every, kind="ctqw", **kwargs)


def suzuki_bound(kappa: float, t: float, L: int) -> float:
    """First-order product-formula error bound ``6 kappa^2 t^2 / L`` for four reflections."""
    if L < 1:
        raise ValueError("L must be >= 1")
    return 6 * kappa**2 * t**2 / L


class RWStep:
    """Average of the four doubly stochastic matching maps."""

    def __init__(self, sset: StaggeredSet, kappa_tau: float):
        b = stochastic_block(kappa_tau)
        self._subs = [_Substep(m, b[0, 0], b[0, 1], 1.0) for m in sset]

    def __call__(self, p: np.ndarray) -> np.ndarray:
        out = self._subs[0](p)
        for sub in self._subs[1:]:
            out += sub(p)
        return 0.25 * out


def rw_step(p: np.ndarray, sset: StaggeredSet, kappa_tau: float) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.shape != (sset.spec.n_sites,):
        raise ValueError(f"distribution has shape {p.shape}, lattice has {sset.spec.n_sites} sites")
    return RWStep(sset, kappa_tau)(p)


def run_rw(
    spec: LatticeSpec,
    steps: int,
    initial: Optional[int] = None,
    sink: Optional[MetricSink] = None,
    *,
    sample_every: int = 1,
    record_distribution: bool = False,
    norm_tol: float = 1e-12,
) -> MetricSeries:
    """Classical random walk from a point mass; records entropy only."""
    _check_run_args(steps, sample_every)
    sset = build_staggered_set(spec)
    step = RWStep(sset, spec.kappa_tau)
    p = basis_state(spec.n_sites, spec.center if initial is None else initial).real.copy()
    series = MetricSeries(spec, "rw")

    def emit(l):
        drift = abs(float(p.sum()) - 1.0)
        series.max_norm_drift = max(series.max_norm_drift, drift)
        if drift > norm_tol:
            raise NormDriftError(f"probability sum drifted by {drift:.3e} at step {l}")
        rec = MetricRecord(l, shannon_entropy(p), None, p.copy() if record_distribution else None)
        series.append(rec)
        if sink is not None:
            sink(rec)

    emit(0)
    for l in range(1, steps + 1):
        p = step(p)
        if l % sample_every == 0 or l == steps:
            emit(l)
    return series

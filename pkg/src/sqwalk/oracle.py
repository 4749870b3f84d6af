"""Dense reference propagators for checking the matching fast paths at small d."""

from __future__ import annotations

import itertools
from typing import Iterable, Optional, Sequence

import numpy as np

from .evolution import DEFAULT_ORDER, StepParams, stochastic_block
from .tessellation import DENSE_MAX_SITES, Matching, StaggeredSet, matching_to_dense


def _guard(n: int):
    if n > DENSE_MAX_SITES:
        raise ValueError(f"dense oracle is capped at {DENSE_MAX_SITES} sites, got {n}")


def expm_hermitian(H: np.ndarray, tau: float) -> np.ndarray:
    """``exp(-i tau H)`` through the eigendecomposition of Hermitian ``H``."""
    H = np.asarray(H)
    _guard(H.shape[0])
    if not np.allclose(H, H.conj().T, atol=1e-12, rtol=0):
        raise ValueError("generator is not Hermitian")
    w, V = np.linalg.eigh(H)
    return (V * np.exp(-1j * tau * w)) @ V.conj().T


def _hamiltonians(matchings: Iterable[Matching], kappa: float, omega: float) -> list[np.ndarray]:
    matchings = list(matchings)
    _guard(matchings[0].n_sites)
    return [matching_to_dense(m, omega, kappa) for m in matchings]


def _default_order(n: int):
    return DEFAULT_ORDER if n == 4 else tuple(range(1, n + 1))


def _ordered_product(mats: list[np.ndarray], order) -> np.ndarray:
    U = np.eye(mats[0].shape[0], dtype=complex)
    for k in order:
        U = mats[k - 1] @ U
    return U


def dense_sqw_propagator(sset: StaggeredSet, p: StepParams) -> np.ndarray:
    """Full-step propagator; the first entry of ``p.order`` acts first."""
    Hs = _hamiltonians(sset, p.kappa_tau, p.omega_tau)
    return _ordered_product([expm_hermitian(H, 1.0) for H in Hs], p.order)


def dense_ctqw_propagator(sset: Iterable[Matching], t: float, kappa: float = 1.0, omega: float = 0.0) -> np.ndarray:
    """``exp(-i t sum_j H_j)``."""
    return expm_hermitian(sum(_hamiltonians(sset, kappa, omega)), t)


def product_formula(sset: Iterable[Matching], t: float, L: int, kappa: float = 1.0, omega: float = 0.0,
                    order: Optional[Sequence[int]] = None) -> np.ndarray:
    """``L`` repetitions of the ordered product of slice propagators.

    ``order`` defaults to the staggered step order for four matchings and to
    the given order otherwise.
    """
    Hs = _hamiltonians(sset, kappa, omega)
    order = _default_order(len(Hs)) if order is None else order
    step = _ordered_product([expm_hermitian(H, t / L) for H in Hs], order)
    return np.linalg.matrix_power(step, L)


def trotter_gap(sset: Iterable[Matching], t: float, L: int, kappa: float = 1.0, omega: float = 0.0,
                order: Optional[Sequence[int]] = None) -> float:
    """Spectral-norm distance between the exact propagator and its product formula."""
    exact = dense_ctqw_propagator(sset, t, kappa, omega)
    approx = product_formula(sset, t, L, kappa, omega, order)
    return float(np.linalg.norm(exact - approx, 2))


def commutator_bound(sset: Iterable[Matching], t: float, L: int, kappa: float = 1.0, omega: float = 0.0) -> float:
    """``t^2 / (2L) * sum_{j>k} ||[H_j, H_k]||`` evaluated from the actual commutators."""
    Hs = _hamiltonians(sset, kappa, omega)
    total = sum(
        np.linalg.norm(Hj @ Hk - Hk @ Hj, 2) for Hj, Hk in itertools.combinations(Hs, 2)
    )
    return float(t * t / (2 * L) * total)


def dense_rw_matrix(sset: StaggeredSet, kappa_tau: float) -> np.ndarray:
    """``1/4 sum_i U_i`` with each ``U_i`` built block by block from the matching."""
    N = sset.spec.n_sites
    _guard(N)
    b = stochastic_block(kappa_tau)
    total = np.zeros((N, N))
    for m in sset:
        U = np.eye(N)
        for a, c in m.pairs - 1:
            U[np.ix_([a, c], [a, c])] = b
        total += U
    return total / 4

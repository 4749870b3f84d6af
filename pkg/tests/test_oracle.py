import math

import numpy as np
import pytest

from sqwalk.evolution import SQWStep, StepParams, block_unitary, suzuki_bound
from sqwalk.lattice import LatticeSpec
from sqwalk.oracle import (
    commutator_bound,
    dense_ctqw_propagator,
    dense_sqw_propagator,
    expm_hermitian,
    trotter_gap,
)
from sqwalk.tessellation import build_staggered_set, matching_to_dense

import kron_reference
from conftest import spec_for


def test_expm_pair_matches_block():
    w, k, tau = 1.3, 0.6, 0.9
    H = w * np.eye(2) - k * np.array([[0, 1], [1, 0]])
    assert np.allclose(expm_hermitian(H, tau), block_unitary(k * tau, w * tau), atol=1e-14)


def test_expm_zero_time():
    H = matching_to_dense(build_staggered_set(LatticeSpec(4))[1], 0.2, 1.0)
    assert np.allclose(expm_hermitian(H, 0.0), np.eye(16), atol=1e-14)


def test_expm_rejects_non_hermitian():
    with pytest.raises(ValueError):
        expm_hermitian(np.array([[0.0, 1.0], [0.0, 0.0]]), 1.0)


def test_expm_kron_structure_d4():
    w, k = 0.5, 1.1
    H = matching_to_dense(build_staggered_set(LatticeSpec(4))[0], w, k)
    expected = np.kron(np.eye(4), np.kron(np.eye(2), block_unitary(k, w)))
    assert np.allclose(expm_hermitian(H, 1.0), expected, atol=1e-12)
    assert np.allclose(H, kron_reference.torus_axis(4, w, k)[0])


def test_expm_unitary(config):
    for m in build_staggered_set(spec_for(config, 6)):
        U = expm_hermitian(matching_to_dense(m, 2.0, 1.0), 0.7)
        assert np.linalg.norm(U.conj().T @ U - np.eye(36)) < 1e-12


@pytest.mark.parametrize("d", [4, 6])
def test_dense_propagator_equals_fast_path(config, d):
    spec = spec_for(config, d)
    sset = build_staggered_set(spec)
    p = StepParams(math.pi / 3, 2 * math.pi)
    U = dense_sqw_propagator(sset, p)
    fast = SQWStep(sset, p)
    cols = np.column_stack([fast(e) for e in np.eye(spec.n_sites, dtype=complex)])
    assert np.max(np.abs(U - cols)) < 1e-10


def test_gap_halves_when_L_doubles():
    sset = build_staggered_set(LatticeSpec(6, "torus", "interleaved"))
    g = [trotter_gap(sset, 1.0, L) for L in (200, 400, 800)]
    assert g[0] / g[1] == pytest.approx(2, rel=0.02)
    assert g[1] / g[2] == pytest.approx(2, rel=0.01)


def test_commuting_pair_has_no_gap():
    sset = build_staggered_set(LatticeSpec(6))
    assert trotter_gap([sset[0], sset[2]], 2.0, 3) < 1e-12


def test_gap_within_bounds_interleaved():
    sset = build_staggered_set(LatticeSpec(6, "torus", "interleaved"))
    gap = trotter_gap(sset, 1.0, 100)
    assert gap <= commutator_bound(sset, 1.0, 100) <= suzuki_bound(1.0, 1.0, 100)


@pytest.mark.parametrize("L", [10, 100, 1000])
def test_gap_bound_all_sets(config, L):
    sset = build_staggered_set(spec_for(config, 6))
    t, kappa = 1.5, 0.8
    assert trotter_gap(sset, t, L, kappa=kappa, omega=3.0) <= suzuki_bound(kappa, t, L)


def test_ctqw_propagator_is_exponential_of_sum():
    sset = build_staggered_set(LatticeSpec(4, "sphere"))
    H = sum(kron_reference.sphere(4, 0.0, 1.0))
    U = dense_ctqw_propagator(sset, 0.3)
    w, V = np.linalg.eigh(H)
    assert np.allclose(U, V @ np.diag(np.exp(-0.3j * w)) @ V.T, atol=1e-12)


def test_scale_guard():
    sset = build_staggered_set(LatticeSpec(66))
    with pytest.raises(ValueError):
        dense_ctqw_propagator(sset, 1.0)

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from sqwalk.evolution import StepParams, basis_state, sqw_step
from sqwalk.lattice import LatticeSpec
from sqwalk.metrics import (
    MetricRecord,
    MetricSeries,
    coherence_dense,
    coherence_pure,
    max_coherence,
    max_entropy,
    normalize_series,
    probability_distribution,
    shannon_entropy,
)
from sqwalk.tessellation import build_staggered_set

finite = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)


def random_state(n, rng):
    psi = rng.normal(size=n) + 1j * rng.normal(size=n)
    return psi / np.linalg.norm(psi)


@st.composite
def states(draw, n=36):
    re = draw(arrays(float, n, elements=finite))
    im = draw(arrays(float, n, elements=finite))
    psi = re + 1j * im
    nrm = np.linalg.norm(psi)
    if nrm < 1e-6:
        psi = np.zeros(n, complex)
        psi[0] = 1
        return psi
    return psi / nrm


def test_probability_distribution():
    assert np.array_equal(probability_distribution(basis_state(9, 4)), np.eye(9)[3])
    assert np.allclose(probability_distribution(np.array([0.5, 1j * math.sqrt(3) / 2])), [0.25, 0.75])
    assert np.allclose(probability_distribution(np.full(16, 0.25)), 1 / 16)


def test_coherence_pure_examples():
    assert coherence_pure(basis_state(36, 5)) == 0
    d = 6
    assert math.isclose(coherence_pure(np.full(d * d, 1 / d)), d * d - 1, rel_tol=1e-14)
    assert math.isclose(coherence_pure(np.array([0.5, 1j * math.sqrt(3) / 2])), math.sqrt(3) / 2, rel_tol=1e-14)


def test_coherence_dense_examples():
    rho = np.zeros((16, 16))
    rho[3, 3] = 1
    assert coherence_dense(rho) == 0
    assert coherence_dense(np.eye(16) / 16) == pytest.approx(0, abs=1e-15)
    spec = LatticeSpec(4, "klein")
    sset = build_staggered_set(spec)
    psi = basis_state(16, spec.center)
    for _ in range(3):
        psi = sqw_step(psi, sset, StepParams(math.pi / 3, 2 * math.pi))
    assert abs(coherence_dense(np.outer(psi, psi.conj())) - coherence_pure(psi)) < 1e-12


def test_coherence_dense_guard():
    with pytest.raises(ValueError):
        coherence_dense(np.zeros((4097, 1)))


@settings(max_examples=50)
@given(states())
def test_coherence_identity_and_bounds(psi):
    c = coherence_pure(psi)
    assert abs(c - coherence_dense(np.outer(psi, psi.conj()))) < 1e-10
    assert -1e-12 <= c <= 35 + 1e-9


@settings(max_examples=50)
@given(states(), arrays(float, 36, elements=st.floats(-math.pi, math.pi)))
def test_coherence_phase_invariant(psi, theta):
    assert abs(coherence_pure(psi) - coherence_pure(np.exp(1j * theta) * psi)) < 1e-10


def test_coherence_maximum_only_at_uniform_modulus():
    rng = np.random.default_rng(3)
    for _ in range(20):
        assert coherence_pure(random_state(36, rng)) < 35


def test_entropy_examples():
    assert shannon_entropy(np.eye(5)[2]) == 0
    assert math.copysign(1, shannon_entropy(np.eye(5)[2])) == 1
    assert shannon_entropy([0.25, 0.75]) == pytest.approx(0.8112781244591328, rel=1e-15)
    assert shannon_entropy(np.full(10**4, 1e-4)) == pytest.approx(2 * math.log2(100), rel=1e-12)


def test_entropy_rejects_negative():
    with pytest.raises(ValueError):
        shannon_entropy([1.5, -0.5])


@given(arrays(float, 36, elements=st.floats(0, 1)))
def test_entropy_bounds(w):
    if w.sum() == 0:
        return
    p = w / w.sum()
    assert -1e-12 <= shannon_entropy(p) <= max_entropy(6) + 1e-9


def test_maxima():
    assert max_coherence(100) == 9999
    assert max_entropy(100) == pytest.approx(13.287712379549449)


def test_normalize_series():
    spec = LatticeSpec(10)
    s = MetricSeries(spec, "sqw", [MetricRecord(0, 0.0, 0.0), MetricRecord(1, max_entropy(10) / 2, 99.0)])
    n = normalize_series(s)
    assert n.normalized and normalize_series(n) is n
    assert np.allclose(n.entropy, [0, 0.5])
    assert np.allclose(n.coherence, [0, 1])
    assert s.coherence[1] == 99.0


def test_series_steps_strictly_increasing():
    s = MetricSeries(LatticeSpec(6), "sqw")
    s.append(MetricRecord(0, 0.0))
    with pytest.raises(ValueError):
        s.append(MetricRecord(0, 0.0))

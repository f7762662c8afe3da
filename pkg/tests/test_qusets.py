import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from conftest import random_complex, random_distribution
from qulogic import (
    DegenerateSetError, DomainError, GridSpec, QuSet, StandardizedFuzzySet, basis,
    from_fuzzy_sqrt, inner, likelihood_fuzzy, normalize, overlap_probability, probabilities,
)

R2 = 1 / math.sqrt(2)


def inner_oracle_2d(q, q2, N):
    """Double sum over (i, j), conjugating the second factor."""
    a, b = q.amplitudes.tolist(), q2.amplitudes.tolist()
    total = 0j
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            K = (i - 1) * N + j
            total += a[K - 1] * b[K - 1].conjugate()
    return total


def test_normalize_examples():
    e1 = basis(1, 4)
    assert np.array_equal(normalize(e1.amplitudes).amplitudes, e1.amplitudes)
    assert normalize([1, 1]).amplitudes.real == pytest.approx([0.70710678, 0.70710678], abs=1e-8)
    with pytest.raises(DegenerateSetError):
        normalize([0, 0, 0, 0])


def test_quset_rejects_unnormalized():
    with pytest.raises(DomainError):
        QuSet([1, 1])
    with pytest.raises(DomainError):
        QuSet([0.5, 0.5, 0.5, 0.5, 0.5], GridSpec(2))


def test_quset_accepts_2d():
    q = QuSet(np.eye(2) * R2)
    assert q.grid == GridSpec(2)
    assert q.amplitudes.tolist() == [R2, 0, 0, R2]


@settings(max_examples=200, deadline=None)
@given(arrays(np.float64, 32, elements=st.floats(-1e3, 1e3)).filter(lambda v: np.linalg.norm(v) > 1e-6))
def test_normalize_conserves_norm(v):
    q = normalize(v[:16] + 1j * v[16:])
    assert abs(np.sum(np.abs(q.amplitudes) ** 2) - 1.0) <= 1e-9
    assert np.abs(q.amplitudes).max() <= 1.0 + 1e-9


def test_from_fuzzy_sqrt_examples():
    assert np.array_equal(from_fuzzy_sqrt(StandardizedFuzzySet([0, 0, 1.0, 0])).amplitudes, basis(3, 4).amplitudes)
    q = from_fuzzy_sqrt(StandardizedFuzzySet([0.25, 0.75]))
    assert q.amplitudes.real == pytest.approx([0.5, 0.86602540], abs=1e-8)
    M = 16
    u = from_fuzzy_sqrt(StandardizedFuzzySet(np.full(M, 1 / M)))
    assert np.allclose(u.amplitudes, 1 / math.sqrt(M), rtol=0, atol=1e-15)


def test_probabilities_examples(rng):
    assert probabilities(basis(2, 4)).p.tolist() == [0, 1, 0, 0]
    assert probabilities(QuSet([R2, 1j * R2])).p == pytest.approx([0.5, 0.5], abs=1e-15)
    for _ in range(50):
        p = StandardizedFuzzySet(random_distribution(rng, 16))
        assert np.max(np.abs(probabilities(from_fuzzy_sqrt(p)).p - p.p)) <= 1e-12


def test_inner_examples():
    q = QuSet([0.6, 0.8j])
    assert abs(inner(q, q) - 1) <= 1e-9
    assert inner(basis(1, 4), basis(2, 4)) == 0
    assert inner(QuSet([1, 0]), QuSet([R2, R2])) == pytest.approx(0.70710678, abs=1e-8)
    # second argument conjugated
    assert inner(basis(1, 2), QuSet([1j, 0])) == pytest.approx(-1j)


def test_overlap_probability_examples():
    q = QuSet([0.6, 0.8j])
    assert overlap_probability(q, q) == pytest.approx(1.0, abs=1e-12)
    assert overlap_probability(basis(1, 2), basis(2, 2)) == 0.0
    assert overlap_probability(QuSet([1, 0]), QuSet([R2, R2])) == pytest.approx(0.5, abs=1e-15)


def test_inner_grid_mismatch():
    with pytest.raises(DomainError):
        inner(basis(1, 4), basis(1, 9))


def test_inner_properties(rng):
    for _ in range(300):
        N = int(rng.integers(1, 9))
        q1 = normalize(random_complex(rng, N * N), GridSpec(N))
        q2 = normalize(random_complex(rng, N * N), GridSpec(N))
        h = inner(q1, q2)
        assert abs(h) <= 1 + 1e-9
        assert h == pytest.approx(inner(q2, q1).conjugate(), abs=1e-15)
        assert abs(h - inner_oracle_2d(q1, q2, N)) <= 1e-12


def test_bridge_identity(rng):
    for _ in range(300):
        M = int(rng.integers(2, 65))
        p1 = StandardizedFuzzySet(random_distribution(rng, M))
        p2 = StandardizedFuzzySet(random_distribution(rng, M))
        h = inner(from_fuzzy_sqrt(p1), from_fuzzy_sqrt(p2))
        assert h.imag == 0.0
        assert abs(h.real - likelihood_fuzzy(p1, p2)) <= 1e-12

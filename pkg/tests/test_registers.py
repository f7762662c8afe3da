import math

import numpy as np
import pytest

from conftest import random_complex, random_distribution
from qulogic import (
    DomainError, Dot, GridSpec, QuSet, QuantumRegister, StandardizedFuzzySet, StochasticRegister,
    basis, empirical_distribution, estimate_overlap, from_fuzzy_sqrt, normalize,
    overlap_probability,
)
from qulogic.registers import cumulative_table

G2, G4 = GridSpec(2), GridSpec(4)
R2 = 1 / math.sqrt(2)


def five_sigma(p, n):
    return 5 * math.sqrt(p * (1 - p) / n)


def uniform(grid):
    return StandardizedFuzzySet(np.full(grid.M, 1 / grid.M), grid)


def test_cumulative_table():
    cum = cumulative_table(np.array([0.0, 0.3, 0.0, 0.7, 0.0]))
    assert np.all(np.diff(cum) >= 0)
    assert cum[-1] == 1.0
    assert cum.tolist() == [0.0, 0.3, 0.3, 1.0, 1.0]


def test_zero_probability_cells_never_drawn():
    p = StandardizedFuzzySet([0.0, 0.5, 0.0, 0.5], G2)
    ks = StochasticRegister(p, seed=3).sample_indices(20000)
    assert set(ks.tolist()) == {2, 4}


def test_sample_delta():
    delta = StandardizedFuzzySet([0, 0, 0, 1.0], G2)
    r = StochasticRegister(delta, seed=1)
    assert {r.sample() for _ in range(100)} == {Dot(2, 2)}


def test_sample_uniform_frequencies():
    T = 100_000
    r = StochasticRegister(uniform(G2), seed=7)
    counts = np.bincount(r.sample_indices(T) - 1, minlength=4)
    assert np.all(np.abs(counts / T - 0.25) <= five_sigma(0.25, T))


def test_sample_deterministic_per_seed():
    p = StandardizedFuzzySet(random_distribution(np.random.default_rng(0), 16), G4)
    r1, r2 = StochasticRegister(p, seed=42), StochasticRegister(p, seed=42)
    assert [r1.sample() for _ in range(500)] == [r2.sample() for _ in range(500)]
    r3 = StochasticRegister(p, seed=43)
    assert not np.array_equal(StochasticRegister(p, seed=42).sample_indices(500), r3.sample_indices(500))


def test_batched_sampling_matches_single_draws():
    p = StandardizedFuzzySet(random_distribution(np.random.default_rng(1), 16), G4)
    single = StochasticRegister(p, seed=9)
    looped = [single.sample_index() for _ in range(1000)]
    assert StochasticRegister(p, seed=9).sample_indices(1000).tolist() == looped


def test_empirical_distribution():
    delta = StandardizedFuzzySet([0, 1.0, 0, 0], G2)
    assert empirical_distribution(StochasticRegister(delta, 5), 17).p.tolist() == [0, 1, 0, 0]
    freq = empirical_distribution(StochasticRegister(uniform(G2), 11), 100_000)
    assert 0.5 * np.sum(np.abs(freq.p - 0.25)) <= 0.02
    again = empirical_distribution(StochasticRegister(uniform(G2), 11), 100_000)
    assert np.array_equal(freq.p, again.p)
    with pytest.raises(DomainError):
        empirical_distribution(StochasticRegister(uniform(G2), 11), 0)


def test_prepare_and_read_back():
    q = normalize([1, 2j, 3, 4], G2)
    reg = QuantumRegister(q, seed=0)
    assert reg.state is q
    reg.measure()
    assert reg.state is not q
    reg.prepare(q)
    assert reg.state is q


def test_measure_basis_state_is_certain():
    e = basis(3, 4, G2)
    reg = QuantumRegister(e, seed=0)
    for _ in range(50):
        assert reg.measure() == Dot(2, 1)
        assert np.array_equal(reg.state.amplitudes, e.amplitudes)
    assert reg.access_count == 50


def test_measure_collapses_to_basis(rng):
    q = normalize(random_complex(rng, 16), G4)
    reg = QuantumRegister(q, seed=5)
    for _ in range(500):
        reg.prepare(q)
        K = reg.measure_index()
        expected = np.zeros(16)
        expected[K - 1] = 1.0
        assert np.array_equal(reg.state.amplitudes, expected)


def test_measure_uniform_frequencies():
    T = 100_000
    q = from_fuzzy_sqrt(uniform(G2))
    reg = QuantumRegister(q, seed=21)
    counts = np.zeros(4)
    for _ in range(T):
        reg.prepare(q)
        counts[reg.measure_index() - 1] += 1
    assert np.all(np.abs(counts / T - 0.25) <= five_sigma(0.25, T))


def test_masked_measure_examples():
    q = normalize([1, 1j, -1, 0.5], G2)
    reg = QuantumRegister(q, seed=2)
    for _ in range(100):
        assert reg.masked_measure(q)
        assert reg.state is q

    e1, e2 = basis(1, 2), basis(2, 2)
    reg = QuantumRegister(e1, seed=2)
    for _ in range(100):
        reg.prepare(e1)
        assert not reg.masked_measure(e2)

    n = 10_000
    mask = QuSet([R2, R2])
    reg = QuantumRegister(e1, seed=4)
    hits = 0
    for _ in range(n):
        reg.prepare(e1)
        hits += reg.masked_measure(mask)
    assert abs(hits / n - 0.5) <= five_sigma(0.5, n)


def test_masked_measure_post_states():
    e1 = basis(1, 2)
    mask = QuSet([R2, R2])
    reg = QuantumRegister(e1, seed=0)
    seen = set()
    for _ in range(200):
        reg.prepare(e1)
        ok = reg.masked_measure(mask)
        seen.add(ok)
        if ok:
            assert reg.state is mask
        else:
            # component of e1 orthogonal to the mask
            assert np.allclose(reg.state.amplitudes, [R2, -R2], atol=1e-12)
    assert seen == {True, False}


def test_masked_measure_grid_mismatch():
    reg = QuantumRegister(basis(1, 4), seed=0)
    with pytest.raises(DomainError):
        reg.masked_measure(basis(1, 9))


def test_state_stays_valid_under_random_operations(rng):
    q = normalize(random_complex(rng, 16), G4)
    reg = QuantumRegister(q, seed=8)
    for step in range(300):
        action = rng.integers(3)
        if action == 0:
            reg.prepare(normalize(random_complex(rng, 16), G4))
        elif action == 1:
            reg.measure()
        else:
            reg.masked_measure(normalize(random_complex(rng, 16), G4))
        a = reg.state.amplitudes
        assert abs(np.sum(np.abs(a) ** 2) - 1) <= 1e-9


def test_repeat_masked_matches_loop(rng):
    q = normalize(random_complex(rng, 16), G4)
    mask = normalize(random_complex(rng, 16), G4)
    looped = QuantumRegister(q, seed=77)
    outcomes = []
    for _ in range(400):
        looped.prepare(q)
        outcomes.append(looped.masked_measure(mask))
    batched = QuantumRegister(q, seed=77)
    assert batched.repeat_masked(mask, 400) == sum(outcomes)
    assert np.allclose(batched.state.amplitudes, looped.state.amplitudes, atol=0)


def test_estimate_overlap_examples():
    q = normalize([1, 2, 3, 4j], G2)
    assert estimate_overlap(q, q, 1000, seed=1).p_hat == 1.0
    assert estimate_overlap(basis(1, 4), basis(4, 4), 1000, seed=1).p_hat == 0.0
    est = estimate_overlap(QuSet([1, 0]), QuSet([R2, R2]), 10_000, seed=1)
    assert abs(est.p_hat - 0.5) <= 5 * est.std_err_p
    assert est.h_abs_hat ** 2 == pytest.approx(est.p_hat)
    with pytest.raises(DomainError):
        estimate_overlap(q, q, 0, seed=1)


def test_estimate_overlap_workers_deterministic(rng):
    q = normalize(random_complex(rng, 16), G4)
    mask = normalize(random_complex(rng, 16), G4)
    a = estimate_overlap(q, mask, 50_001, seed=3, workers=4)
    b = estimate_overlap(q, mask, 50_001, seed=3, workers=4)
    assert a == b and a.trials == 50_001
    exact = overlap_probability(q, mask)
    assert abs(a.p_hat - exact) <= five_sigma(exact, a.trials)
    # single worker is seeded with the base seed
    assert estimate_overlap(q, mask, 1000, seed=3).successes == QuantumRegister(q, 3).repeat_masked(mask, 1000)


def test_estimator_consistency_random_pairs(rng):
    T = 100_000
    for s in range(10):
        q = normalize(random_complex(rng, 16), G4)
        mask = normalize(random_complex(rng, 16), G4)
        exact = overlap_probability(q, mask)
        est = estimate_overlap(q, mask, T, seed=100 + s)
        assert abs(est.p_hat - exact) <= five_sigma(exact, T)


def test_seed_validation():
    with pytest.raises(DomainError):
        StochasticRegister(uniform(G2), seed=-1)
    with pytest.raises(DomainError):
        QuantumRegister(basis(1, 4), seed=1.5)

"""
Stochastic and quantum registers
================================

A stochastic register returns dot x with probability p[x]. A quantum
register holding sqrt(p) does the same, but each read collapses it, so it is
prepared again before every access. A masked read against a second state
succeeds with probability |H|^2, which makes |H| measurable by repetition.
"""
import numpy as np

from qulogic import (
    GridSpec, QuantumRegister, StandardizedFuzzySet, StochasticRegister, empirical_distribution,
    estimate_overlap, from_fuzzy_sqrt, normalize, overlap_probability,
)

g = GridSpec(4)
rng = np.random.default_rng(0)
p = StandardizedFuzzySet(rng.dirichlet(np.ones(g.M)), g)

# Time fractions t[v]/T approach p[v].
reg = StochasticRegister(p, seed=1)
for T in (100, 10_000, 1_000_000):
    freq = empirical_distribution(reg, T)
    print(f"T={T:>8}: total variation to p = {0.5 * np.abs(freq.p - p.p).sum():.4f}")

# Quantum register: prepare, measure, look at the collapsed state.
q = from_fuzzy_sqrt(p)
qreg = QuantumRegister(q, seed=2)
dot = qreg.measure()
print("\nmeasured", dot, "-> state is now basis vector at that dot:")
print(np.round(abs(qreg.state.as_grid()), 3))

counts = np.zeros(g.M)
for _ in range(20_000):
    qreg.prepare(q)
    counts[qreg.measure_index() - 1] += 1
print("max |freq - p| over cells after 20000 prepare+measure cycles:",
      np.abs(counts / 20_000 - p.p).max().round(4))

# Masked readout: estimate |H|^2 and compare with the exact value.
mask = normalize(rng.normal(size=g.M) + 1j * rng.normal(size=g.M), g)
exact = overlap_probability(q, mask)
print(f"\nexact |H|^2 = {exact:.5f}")
for trials in (100, 10_000, 1_000_000):
    est = estimate_overlap(q, mask, trials, seed=3, workers=4)
    z = (est.p_hat - exact) / est.std_err_p
    print(f"trials={trials:>8}: p_hat={est.p_hat:.5f} +- {est.std_err_p:.5f}  |H|~{est.h_abs_hat:.4f}  z={z:+.2f}")

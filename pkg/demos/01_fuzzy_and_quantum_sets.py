"""
From crisp sets to quantum sets
===============================

A 4x4 lattice carries, in turn, a crisp set, a fuzzy set, a standardized
fuzzy set (a probability distribution) and a quantum set (its square root).
"""
import numpy as np

from qulogic import (
    CrispSet, FuzzySet, GridSpec, QuSet, crisp_and, crisp_or, crisp_to_fuzzy, from_fuzzy_sqrt,
    fuzzy_and, fuzzy_not, fuzzy_or, inner, likelihood_fuzzy, probabilities, standardize,
)

g = GridSpec.from_bits(2)  # N = 4, M = 16

# Crisp sets: a row and a column of the grid.
row = CrispSet.from_dots([(2, j) for j in range(1, 5)], g)
col = CrispSet.from_dots([(i, 3) for i in range(1, 5)], g)
print("row & col:", sorted(crisp_and(row, col).dots()))
print("|row | col| =", len(crisp_or(row, col).dots()))

# Their indicator functions are fuzzy sets, and the algebraic connectives
# agree with the Boolean ones on 0/1 values.
assert np.array_equal(fuzzy_and(crisp_to_fuzzy(row), crisp_to_fuzzy(col)).values,
                      crisp_to_fuzzy(crisp_and(row, col)).values)

# A gray blob and a shifted copy.
i, j = np.mgrid[1:5, 1:5]
blob = FuzzySet(np.exp(-((i - 2) ** 2 + (j - 2) ** 2) / 2.0), g)
shifted = FuzzySet(np.exp(-((i - 3) ** 2 + (j - 2) ** 2) / 2.0), g)
print("\nblob:\n", np.round(blob.as_grid(), 2))
print("not blob:\n", np.round(fuzzy_not(blob).as_grid(), 2))
print("blob or shifted (a+b-ab):\n", np.round(fuzzy_or(blob, shifted).as_grid(), 2))
print("blob and shifted (min):\n", np.round(fuzzy_and(blob, shifted, norm="min").as_grid(), 2))

# Standardize and compare.
p1, p2 = standardize(blob), standardize(shifted)
print("\nH(p1, p1) =", likelihood_fuzzy(p1, p1))
print("H(p1, p2) =", likelihood_fuzzy(p1, p2))

# The same number is the scalar product of the square-root quantum sets.
q1, q2 = from_fuzzy_sqrt(p1), from_fuzzy_sqrt(p2)
print("inner(sqrt p1, sqrt p2) =", inner(q1, q2))
print("probabilities recovered:", np.allclose(probabilities(q1).p, p1.p))

# A complex phase changes the amplitudes but not the probabilities.
phase = np.exp(1j * np.pi * (i + j) / 4).reshape(-1)
q1_phased = QuSet(q1.amplitudes * phase, g)
print("|inner| with a phase pattern:", abs(inner(q1_phased, q2)), "(<= H)")

"""Normalized quantum sets: complex amplitudes with unit Hermitian norm.

A quantum set is the "square root" of a standardized fuzzy set: its
probabilities are ``|q[x]|**2`` and the scalar product of two real quantum sets
``sqrt(p1)``, ``sqrt(p2)`` is the fuzzy likelihood ``sum sqrt(p1 * p2)``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._arrays import EPS_NORM, flat_values
from .errors import DegenerateSetError, DomainError
from .fuzzysets import StandardizedFuzzySet
from .lattice import GridSpec, check_grids

__all__ = [
    "QuSet", "normalize", "basis", "from_fuzzy_sqrt", "probabilities",
    "inner", "overlap_probability",
]


@dataclass(frozen=True, eq=False)
class QuSet:
    """Complex amplitude per dot with ``sum |q|**2 == 1`` (within ``1e-9``).

    The constructor validates; use :func:`normalize` to build one from an
    arbitrary nonzero vector.
    """

    amplitudes: np.ndarray
    grid: GridSpec | None = None

    def __post_init__(self):
        arr, grid = flat_values(self.amplitudes, self.grid, complex)
        if not np.all(np.isfinite(arr)):
            raise DomainError("amplitudes must be finite")
        norm2 = float(np.sum(arr.real ** 2 + arr.imag ** 2))
        if abs(norm2 - 1.0) > EPS_NORM:
            raise DomainError(f"quantum set is not normalized: sum |q|^2 = {norm2!r}")
        if np.abs(arr).max() > 1.0 + EPS_NORM:
            raise DomainError("amplitude magnitude exceeds 1")
        object.__setattr__(self, "amplitudes", arr)
        object.__setattr__(self, "grid", grid)

    def __len__(self):
        return self.amplitudes.size

    def __array__(self, dtype=None, copy=None):
        return self.amplitudes if dtype is None else self.amplitudes.astype(dtype)

    def as_grid(self) -> np.ndarray:
        grid = self.grid or GridSpec.from_size(self.amplitudes.size)
        return self.amplitudes.reshape(grid.N, grid.N)


def normalize(raw, grid: GridSpec | None = None) -> QuSet:
    """Divide ``raw`` by its Hermitian norm.

    Raises
    ------
    DegenerateSetError
        For the zero vector.
    """
    arr = np.asarray(raw, dtype=complex)
    norm = np.sqrt(np.sum(arr.real ** 2 + arr.imag ** 2))
    if not norm > 0.0:
        raise DegenerateSetError("cannot normalize the zero vector")
    return QuSet(arr / norm, grid)


def basis(K: int, size: int, grid: GridSpec | None = None) -> QuSet:
    """Basis state with amplitude 1 at the 1-based flat index ``K``."""
    if not 1 <= K <= size:
        raise DomainError(f"flat index {K} outside 1..{size}")
    e = np.zeros(size, dtype=complex)
    e[K - 1] = 1.0
    return QuSet(e, grid)


def from_fuzzy_sqrt(p: StandardizedFuzzySet) -> QuSet:
    return QuSet(np.sqrt(p.values).astype(complex), p.grid)


def probabilities(q: QuSet) -> StandardizedFuzzySet:
    a = q.amplitudes
    return StandardizedFuzzySet(a.real ** 2 + a.imag ** 2, q.grid)


def inner(q: QuSet, q2: QuSet) -> complex:
    """Scalar product ``sum_K q[K] * conj(q2[K])``; the second argument is conjugated."""
    check_grids(len(q), q.grid, len(q2), q2.grid)
    return complex(np.sum(q.amplitudes * np.conj(q2.amplitudes)))


def overlap_probability(q: QuSet, q2: QuSet) -> float:
    """``|inner(q, q2)|**2``, the success probability of a masked readout."""
    h = inner(q, q2)
    return h.real ** 2 + h.imag ** 2

"""Crisp sets, fuzzy sets and their logic.

Every set is stored as a flat array over the lattice (see :mod:`qulogic.lattice`).
Two pairs of fuzzy connectives are available: the algebraic ``product`` pair
(``a*b`` and ``a + b - a*b``, the default) and the ``min``/``max`` pair.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._arrays import EPS_NORM, flat_values
from .errors import DegenerateSetError, DomainError
from .lattice import GridSpec, check_grids

__all__ = [
    "CrispSet", "FuzzySet", "StandardizedFuzzySet",
    "crisp_not", "crisp_and", "crisp_or", "crisp_to_fuzzy",
    "fuzzy_not", "fuzzy_and", "fuzzy_or", "standardize", "likelihood_fuzzy",
]

_AND_NORMS = {"product", "min", "minmax"}
_OR_NORMS = {"product", "max", "minmax"}


@dataclass(frozen=True, eq=False)
class CrispSet:
    """Boolean membership per dot ("black set on white sheet")."""

    membership: np.ndarray
    grid: GridSpec | None = None

    def __post_init__(self):
        arr, grid = flat_values(self.membership, self.grid, bool)
        object.__setattr__(self, "membership", arr)
        object.__setattr__(self, "grid", grid)

    @classmethod
    def from_dots(cls, dots, grid: GridSpec) -> "CrispSet":
        from .lattice import flatten
        members = np.zeros(grid.M, dtype=bool)
        for d in dots:
            members[flatten(d, grid) - 1] = True
        return cls(members, grid)

    def dots(self):
        from .lattice import unflatten
        grid = self.grid or GridSpec.from_size(self.membership.size)
        return {unflatten(int(k) + 1, grid) for k in np.flatnonzero(self.membership)}

    def __len__(self):
        return self.membership.size

    def __eq__(self, other):
        if not isinstance(other, CrispSet):
            return NotImplemented
        return self.grid == other.grid and np.array_equal(self.membership, other.membership)


@dataclass(frozen=True, eq=False)
class FuzzySet:
    """Adequacy value in ``[0, 1]`` per dot, a gray-scale picture."""

    values: np.ndarray
    grid: GridSpec | None = None

    def __post_init__(self):
        arr, grid = flat_values(self.values, self.grid, float)
        if not np.all(np.isfinite(arr)):
            raise DomainError("fuzzy set values must be finite")
        if arr.min() < 0.0 or arr.max() > 1.0:
            raise DomainError(f"fuzzy set values must lie in [0, 1], got range [{arr.min()}, {arr.max()}]")
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "grid", grid)

    @property
    def adequacy(self) -> np.ndarray:
        return self.values

    def as_grid(self) -> np.ndarray:
        grid = self.grid or GridSpec.from_size(self.values.size)
        return self.values.reshape(grid.N, grid.N)

    def __len__(self):
        return self.values.size


@dataclass(frozen=True, eq=False)
class StandardizedFuzzySet(FuzzySet):
    """Fuzzy set whose values sum to one: a probability distribution over dots."""

    def __post_init__(self):
        super().__post_init__()
        total = self.values.sum()
        if abs(total - 1.0) > EPS_NORM:
            raise DomainError(f"standardized set must sum to 1, sums to {total!r}")

    @property
    def p(self) -> np.ndarray:
        return self.values


def _pair(a, b):
    return check_grids(len(a), a.grid, len(b), b.grid)


def crisp_not(a: CrispSet) -> CrispSet:
    return CrispSet(~a.membership, a.grid)


def crisp_and(a: CrispSet, b: CrispSet) -> CrispSet:
    grid = _pair(a, b)
    return CrispSet(a.membership & b.membership, grid)


def crisp_or(a: CrispSet, b: CrispSet) -> CrispSet:
    grid = _pair(a, b)
    return CrispSet(a.membership | b.membership, grid)


def crisp_to_fuzzy(a: CrispSet) -> FuzzySet:
    return FuzzySet(a.membership.astype(float), a.grid)


def fuzzy_not(a: FuzzySet) -> FuzzySet:
    return FuzzySet(1.0 - a.values, a.grid)


def fuzzy_and(a: FuzzySet, b: FuzzySet, norm: str = "product") -> FuzzySet:
    """Componentwise conjunction: ``a*b`` (product) or ``min(a, b)``."""
    grid = _pair(a, b)
    if norm not in _AND_NORMS:
        raise DomainError(f"unknown conjunction norm {norm!r}")
    if norm == "product":
        return FuzzySet(a.values * b.values, grid)
    return FuzzySet(np.minimum(a.values, b.values), grid)


def fuzzy_or(a: FuzzySet, b: FuzzySet, norm: str = "product") -> FuzzySet:
    """Componentwise disjunction: ``a + b - a*b`` (product) or ``max(a, b)``."""
    grid = _pair(a, b)
    if norm not in _OR_NORMS:
        raise DomainError(f"unknown disjunction norm {norm!r}")
    if norm == "product":
        out = a.values + b.values - a.values * b.values
        # a + b - ab can leave [0, 1] by one ulp
        return FuzzySet(np.clip(out, 0.0, 1.0), grid)
    return FuzzySet(np.maximum(a.values, b.values), grid)


def standardize(a: FuzzySet) -> StandardizedFuzzySet:
    """Scale ``a`` to unit total mass.

    Raises
    ------
    DegenerateSetError
        If every value is zero.
    """
    total = a.values.sum()
    if total <= 0.0:
        raise DegenerateSetError("cannot standardize a fuzzy set with zero total mass")
    return StandardizedFuzzySet(a.values / total, a.grid)


def likelihood_fuzzy(p1: StandardizedFuzzySet, p2: StandardizedFuzzySet) -> float:
    """Bhattacharyya-type overlap ``sum_x sqrt(p1[x] * p2[x])``, equal to 1 only for ``p1 == p2``."""
    _pair(p1, p2)
    h = float(np.sum(np.sqrt(p1.values * p2.values)))
    return min(h, 1.0)

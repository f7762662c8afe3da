"""Simulated registers.

:class:`StochasticRegister` holds a standardized fuzzy set and yields a dot with
probability ``p[x]`` on every access. :class:`QuantumRegister` holds a quantum
set; reading it yields ``x`` with probability ``|q[x]|**2`` and collapses the
state to the basis vector at ``x``, so it has to be prepared again before the
next independent access. A masked readout against a prepared reference state
succeeds with probability ``|H(q, mask)|**2``.

Randomness comes from numpy's PCG64 bit generator seeded with a caller-supplied
integer. Draws use inverse-CDF lookup: ``u = 1 - U[0, 1)`` lies in ``(0, 1]``
and selects the first flat index whose cumulative probability is ``>= u``, so
ties at a boundary go to the lower index and zero-probability cells are never
chosen.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .fuzzysets import StandardizedFuzzySet
from .lattice import Dot, GridSpec, check_grids, unflatten
from .qusets import QuSet, basis, overlap_probability, probabilities

__all__ = [
    "make_rng", "cumulative_table", "StochasticRegister", "QuantumRegister",
    "OverlapEstimate", "empirical_distribution", "estimate_overlap",
]

# |H|^2 within this distance of 0 or 1 is rounding noise; treated as exact.
_SNAP = 1e-12


def make_rng(seed: int) -> np.random.Generator:
    if seed is None or int(seed) != seed or seed < 0:
        raise DomainError(f"seed must be a non-negative integer, got {seed!r}")
    return np.random.Generator(np.random.PCG64(int(seed)))


def cumulative_table(p: np.ndarray) -> np.ndarray:
    """Non-decreasing cumulative sums of ``p`` ending exactly at 1."""
    cum = np.cumsum(p, dtype=float)
    last = np.flatnonzero(p > 0)[-1]
    cum[last:] = 1.0
    return cum


def _lookup(cum: np.ndarray, rng: np.random.Generator, size=None):
    u = 1.0 - rng.random(size)
    return np.searchsorted(cum, u, side="left")


def _grid_for(size: int, grid: GridSpec | None) -> GridSpec:
    return grid if grid is not None else GridSpec.from_size(size)


class StochasticRegister:
    """Register whose value, on each access, is dot ``x`` with probability ``p[x]``."""

    def __init__(self, distribution: StandardizedFuzzySet, seed: int):
        self.distribution = distribution
        self.cumulative = cumulative_table(distribution.p)
        self._rng = make_rng(seed)

    def sample_index(self) -> int:
        """Draw one value as a 1-based flat index."""
        return int(_lookup(self.cumulative, self._rng)) + 1

    def sample(self) -> Dot:
        return unflatten(self.sample_index(), _grid_for(len(self.distribution), self.distribution.grid))

    def sample_indices(self, count: int) -> np.ndarray:
        """``count`` successive draws as 1-based flat indices.

        Consumes the generator exactly like ``count`` calls to :meth:`sample_index`.
        """
        return _lookup(self.cumulative, self._rng, count) + 1


def empirical_distribution(r: StochasticRegister, T: int) -> StandardizedFuzzySet:
    """Fraction of ``T`` accesses at which the register held each value."""
    if T < 1:
        raise DomainError(f"need at least one access, got T={T}")
    counts = np.bincount(r.sample_indices(T) - 1, minlength=len(r.distribution))
    return StandardizedFuzzySet(counts / T, r.distribution.grid)


class QuantumRegister:
    """A quantum set held in a register with destructive readout."""

    def __init__(self, state: QuSet, seed: int):
        self._state = state
        self._rng = make_rng(seed)
        self.access_count = 0

    @property
    def state(self) -> QuSet:
        return self._state

    def prepare(self, q: QuSet) -> None:
        self._state = q

    def measure_index(self) -> int:
        """Read the register; returns the 1-based flat index and collapses the state."""
        q = self._state
        cum = cumulative_table(probabilities(q).p)
        K = int(_lookup(cum, self._rng)) + 1
        self._state = basis(K, len(q), q.grid)
        self.access_count += 1
        return K

    def measure(self) -> Dot:
        size, grid = len(self._state), self._state.grid
        return unflatten(self.measure_index(), _grid_for(size, grid))

    def _success_probability(self, mask: QuSet) -> float:
        check_grids(len(self._state), self._state.grid, len(mask), mask.grid)
        p = overlap_probability(self._state, mask)
        if p < _SNAP:
            return 0.0
        if p > 1.0 - _SNAP:
            return 1.0
        return p

    def _after(self, success: bool, mask: QuSet) -> QuSet:
        if success:
            return mask
        q = self._state.amplitudes
        m = mask.amplitudes
        residual = q - m * np.sum(q * np.conj(m))
        norm = np.sqrt(np.sum(np.abs(residual) ** 2))
        return QuSet(residual / norm, self._state.grid)

    def masked_measure(self, mask: QuSet) -> bool:
        """Read the register through ``mask``.

        Succeeds with probability ``|H(state, mask)|**2`` and leaves the state
        equal to ``mask``; on failure the state becomes the normalized part of
        the old state orthogonal to ``mask``.
        """
        p = self._success_probability(mask)
        success = bool(self._rng.random() < p)
        self._state = self._after(success, mask)
        self.access_count += 1
        return success

    def repeat_masked(self, mask: QuSet, trials: int) -> int:
        """Run ``trials`` cycles of prepare(current state) + masked readout.

        Returns the number of successes. Draw-for-draw identical to calling
        :meth:`prepare` and :meth:`masked_measure` in a loop.
        """
        if trials < 1:
            raise DomainError(f"need at least one trial, got {trials}")
        p = self._success_probability(mask)
        hits = self._rng.random(trials) < p
        self._state = self._after(bool(hits[-1]), mask)
        self.access_count += trials
        return int(hits.sum())


@dataclass(frozen=True)
class OverlapEstimate:
    successes: int
    trials: int

    @property
    def p_hat(self) -> float:
        return self.successes / self.trials

    @property
    def h_abs_hat(self) -> float:
        return math.sqrt(self.p_hat)

    @property
    def std_err_p(self) -> float:
        p = self.p_hat
        return math.sqrt(p * (1.0 - p) / self.trials)


def _split(trials: int, workers: int) -> list[int]:
    base, extra = divmod(trials, workers)
    return [base + (w < extra) for w in range(workers)]


def estimate_overlap(q: QuSet, mask: QuSet, trials: int, seed: int, workers: int = 1) -> OverlapEstimate:
    """Monte Carlo estimate of ``|H(q, mask)|**2`` from repeated masked readouts.

    Trials are split across ``workers`` independent registers seeded
    ``seed + ordinal``; the result is deterministic for a given
    ``(seed, workers)`` pair.
    """
    if trials < 1:
        raise DomainError(f"need at least one trial, got {trials}")
    if workers < 1:
        raise DomainError(f"need at least one worker, got {workers}")
    check_grids(len(q), q.grid, len(mask), mask.grid)

    def run(ordinal, n):
        if n == 0:
            return 0
        return QuantumRegister(q, seed + ordinal).repeat_masked(mask, n)

    chunks = _split(trials, workers)
    if workers == 1:
        successes = run(0, trials)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            successes = sum(pool.map(run, range(workers), chunks))
    return OverlapEstimate(successes, trials)

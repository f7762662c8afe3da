"""Linear maps on quantum sets and the logic of projectors.

Operators are dense ``M x M`` complex matrices acting on flat amplitude
vectors, input on the right: ``out[I] = sum_K L[I, K] * q[K]``.

For a family of mutually orthogonal projectors the operations

    not P = 1 - P,    P and R = P R,    P or R = P + R - P R

form a Boolean algebra whose elements are the sums ``P_(S) = sum_{I in S} P_I``.
When ``P R != R P`` the same formulas no longer close over projectors.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from ._arrays import EPS_NORM, EPS_OP
from .errors import DomainError
from .fuzzysets import FuzzySet
from .lattice import GridSpec, check_grids
from .qusets import QuSet, inner

__all__ = [
    "QuMap", "Projector", "OrthogonalFamily", "MixedState", "UnsupportedFamilyError",
    "identity", "apply", "compose", "projector_from_quset", "is_projector",
    "logic_not", "logic_and", "logic_or", "project_set", "commutator",
    "family_from_orthonormal", "diagonalize_family", "mixed_state", "diagonal_operator",
    "max_abs",
]

# Gram-Schmidt candidates with a smaller residual norm are skipped.
GS_REJECT = 1e-6


class UnsupportedFamilyError(DomainError):
    pass


@dataclass(frozen=True, eq=False)
class QuMap:
    """Square complex matrix acting on quantum sets over ``grid``."""

    matrix: np.ndarray
    grid: GridSpec | None = None

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DomainError(f"operator must be a square matrix, got shape {m.shape}")
        if self.grid is not None and m.shape[0] != self.grid.M:
            raise DomainError(f"{m.shape[0]}x{m.shape[0]} matrix does not act on a grid with M={self.grid.M}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def M(self) -> int:
        return self.matrix.shape[0]

    def __array__(self, dtype=None, copy=None):
        return self.matrix if dtype is None else self.matrix.astype(dtype)


@dataclass(frozen=True, eq=False)
class Projector(QuMap):
    """Hermitian idempotent operator (checked to ``1e-8`` per entry)."""

    def __post_init__(self):
        super().__post_init__()
        if not is_projector(self.matrix):
            raise DomainError("matrix is not a Hermitian idempotent")


def max_abs(a) -> float:
    return float(np.max(np.abs(np.asarray(a)))) if np.size(a) else 0.0


def _mat(x) -> np.ndarray:
    if isinstance(x, QuMap):
        return x.matrix
    return np.asarray(x, dtype=complex)


def _grid(*ops) -> GridSpec | None:
    grid = None
    size = None
    for op in ops:
        m = _mat(op)
        g = op.grid if isinstance(op, QuMap) else None
        if size is None:
            size, grid = m.shape[0], g
        else:
            grid = check_grids(size, grid, m.shape[0], g)
    return grid


def identity(M: int, grid: GridSpec | None = None) -> QuMap:
    return QuMap(np.eye(M), grid)


def apply(L, q) -> np.ndarray:
    """Raw image ``L q``; not renormalized (a general map need not preserve the norm)."""
    m = _mat(L)
    v = q.amplitudes if isinstance(q, QuSet) else np.asarray(q, dtype=complex)
    if v.shape != (m.shape[1],):
        raise DomainError(f"cannot apply a {m.shape[0]}x{m.shape[1]} operator to a vector of shape {v.shape}")
    return m @ v


def compose(A, B) -> QuMap:
    """Operator product ``C = A B`` (``B`` acts first)."""
    grid = _grid(A, B)
    return QuMap(_mat(A) @ _mat(B), grid)


def projector_from_quset(q: QuSet) -> Projector:
    """Rank-one projector ``P[I, J] = q[I] * conj(q[J])``."""
    a = q.amplitudes
    return Projector(np.outer(a, np.conj(a)), q.grid)


def is_projector(P, eps: float = EPS_OP) -> bool:
    m = _mat(P)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return max_abs(m @ m - m) <= eps and max_abs(m - m.conj().T) <= eps


def logic_not(P) -> QuMap:
    m = _mat(P)
    return QuMap(np.eye(m.shape[0]) - m, _grid(P))


def logic_and(P, R) -> QuMap:
    return compose(P, R)


def logic_or(P, R) -> QuMap:
    grid = _grid(P, R)
    p, r = _mat(P), _mat(R)
    return QuMap(p + r - p @ r, grid)


def commutator(P, R) -> QuMap:
    grid = _grid(P, R)
    p, r = _mat(P), _mat(R)
    return QuMap(p @ r - r @ p, grid)


@dataclass(frozen=True, eq=False)
class OrthogonalFamily:
    """Projectors with ``P_i P_j = 0`` for ``i != j``.

    ``vectors`` holds the orthonormal quantum sets when the family was built
    from them; only such families can be diagonalized.
    """

    projectors: tuple[Projector, ...]
    vectors: tuple[QuSet, ...] | None = None

    def __post_init__(self):
        projectors = tuple(p if isinstance(p, Projector) else Projector(_mat(p)) for p in self.projectors)
        if not projectors:
            raise DomainError("a family needs at least one projector")
        _grid(*projectors)
        for (i, a), (j, b) in combinations(enumerate(projectors, 1), 2):
            dev = max(max_abs(a.matrix @ b.matrix), max_abs(b.matrix @ a.matrix))
            if dev > EPS_OP:
                raise DomainError(f"projectors {i} and {j} are not orthogonal (max |P_i P_j| = {dev:.3g})")
        object.__setattr__(self, "projectors", projectors)
        if self.vectors is not None:
            object.__setattr__(self, "vectors", tuple(self.vectors))

    def __len__(self):
        return len(self.projectors)

    def __getitem__(self, i):
        return self.projectors[i]

    @property
    def M(self) -> int:
        return self.projectors[0].M

    @property
    def grid(self) -> GridSpec | None:
        return _grid(*self.projectors)


def project_set(fam: OrthogonalFamily, S) -> Projector:
    """Sum of the family members with 1-based indices in ``S``; ``S = {}`` gives zero."""
    total = np.zeros((fam.M, fam.M), dtype=complex)
    for i in sorted(set(S)):
        if not 1 <= i <= len(fam):
            raise DomainError(f"index {i} outside family 1..{len(fam)}")
        total += fam[i - 1].matrix
    return Projector(total, fam.grid)


def family_from_orthonormal(qs: Sequence[QuSet], eps: float = EPS_OP) -> OrthogonalFamily:
    """Rank-one projectors ``q_i q_i^+`` of pairwise orthogonal quantum sets."""
    qs = tuple(qs)
    if not qs:
        raise DomainError("need at least one quantum set")
    for (i, a), (j, b) in combinations(enumerate(qs, 1), 2):
        h = abs(inner(a, b))
        if h > eps:
            raise DomainError(f"quantum sets {i} and {j} are not orthogonal (|H| = {h:.8g})")
    return OrthogonalFamily(tuple(projector_from_quset(q) for q in qs), qs)


def _complete_basis(vectors: np.ndarray) -> np.ndarray:
    """Extend orthonormal columns to a full orthonormal basis.

    Standard basis vectors are tried in order; each is orthogonalized against
    the current basis (two passes of modified Gram-Schmidt) and kept only if
    its residual norm is at least ``GS_REJECT``.
    """
    M, k = vectors.shape
    basis = [vectors[:, c] for c in range(k)]
    for e in range(M):
        if len(basis) == M:
            break
        v = np.zeros(M, dtype=complex)
        v[e] = 1.0
        for _ in range(2):
            for b in basis:
                v = v - b * np.vdot(b, v)
        norm = np.linalg.norm(v)
        if norm < GS_REJECT:
            continue
        basis.append(v / norm)
    if len(basis) != M:
        raise DomainError("basis completion failed")
    return np.column_stack(basis)


def diagonalize_family(fam: OrthogonalFamily) -> QuMap:
    """Unitary ``U`` with ``U P_i U^-1 = diag(0, .., 1 at i, .., 0)`` for every member.

    Rows of ``U`` are the conjugated family vectors followed by the completion
    of the basis.
    """
    if fam.vectors is None:
        raise UnsupportedFamilyError("family was not built from orthonormal quantum sets")
    cols = np.column_stack([q.amplitudes for q in fam.vectors])
    B = _complete_basis(cols)
    return QuMap(B.conj().T, fam.grid)


@dataclass(frozen=True, eq=False)
class MixedState:
    """Statistical operator ``R = sum_i w_i P_i``."""

    weights: np.ndarray
    family: OrthogonalFamily
    R: QuMap = field(init=False)

    def __post_init__(self):
        w = np.array(self.weights, dtype=float)
        if w.ndim != 1 or w.size != len(self.family):
            raise DomainError(f"need {len(self.family)} weights, got {w.size}")
        if np.any(w < 0):
            raise DomainError("weights must be non-negative")
        if abs(w.sum() - 1.0) > EPS_NORM:
            raise DomainError(f"weights must sum to 1, sum to {w.sum()!r}")
        w.setflags(write=False)
        R = sum(wi * P.matrix for wi, P in zip(w, self.family.projectors))
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "R", QuMap(R, self.family.grid))


def mixed_state(w, fam: OrthogonalFamily) -> MixedState:
    return MixedState(w, fam)


def diagonal_operator(a: FuzzySet) -> QuMap:
    """Diagonal matrix carrying ``a``; products and the ``or`` formula act componentwise."""
    return QuMap(np.diag(a.values.astype(complex)), a.grid)

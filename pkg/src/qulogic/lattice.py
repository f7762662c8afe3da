"""Square lattice of dots and its row-major flattening.

A dot ``(i, j)`` with ``1 <= i, j <= N`` maps to the flat index
``K = (i - 1) * N + j`` in ``1..M`` with ``M = N * N``. Both index spaces are
1-based at the public surface; arrays are stored 0-based in flat order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import DomainError

__all__ = ["GridSpec", "Dot", "flatten", "unflatten", "check_grids"]


@dataclass(frozen=True)
class GridSpec:
    """An ``N x N`` lattice. ``n`` is the optional bit count per axis (``N = 2**n``)."""

    N: int
    n: int | None = None

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 1:
            raise DomainError(f"grid axis length must be a positive integer, got {self.N!r}")
        if self.n is not None:
            if self.n < 0 or 2 ** self.n != self.N:
                raise DomainError(f"N={self.N} is not 2**n for n={self.n}")

    @classmethod
    def from_bits(cls, n: int) -> "GridSpec":
        return cls(2 ** n, n)

    @classmethod
    def from_size(cls, M: int) -> "GridSpec":
        """Grid with ``M`` cells; ``M`` must be a perfect square."""
        N = int(round(M ** 0.5))
        if N * N != M:
            raise DomainError(f"{M} cells do not form a square grid")
        return cls(N)

    @property
    def M(self) -> int:
        return self.N * self.N

    def dots(self) -> Iterator["Dot"]:
        """All dots in flat-index order."""
        for i in range(1, self.N + 1):
            for j in range(1, self.N + 1):
                yield Dot(i, j)


class Dot(NamedTuple):
    i: int
    j: int


def flatten(d: Dot | tuple[int, int], g: GridSpec) -> int:
    i, j = d
    if not (1 <= i <= g.N and 1 <= j <= g.N):
        raise DomainError(f"dot ({i}, {j}) outside the {g.N}x{g.N} grid")
    return (i - 1) * g.N + j


def unflatten(K: int, g: GridSpec) -> Dot:
    if not 1 <= K <= g.M:
        raise DomainError(f"flat index {K} outside 1..{g.M}")
    i, j = divmod(K - 1, g.N)
    return Dot(i + 1, j + 1)


def check_grids(size_a: int, grid_a: GridSpec | None, size_b: int, grid_b: GridSpec | None) -> GridSpec | None:
    """Return the common grid of two operands or raise ``DomainError``.

    Operands without a grid are bare flat vectors; only their lengths must agree.
    """
    if size_a != size_b:
        raise DomainError(f"size mismatch: {size_a} vs {size_b} cells")
    if grid_a is not None and grid_b is not None and grid_a.N != grid_b.N:
        raise DomainError(f"grid mismatch: N={grid_a.N} vs N={grid_b.N}")
    return grid_a if grid_a is not None else grid_b

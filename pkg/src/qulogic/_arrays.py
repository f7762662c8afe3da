from __future__ import annotations

import numpy as np

from .errors import DomainError
from .lattice import GridSpec

EPS_NORM = 1e-9
EPS_OP = 1e-8


def flat_values(values, grid: GridSpec | None, dtype) -> tuple[np.ndarray, GridSpec | None]:
    """Coerce a flat or ``N x N`` array to a read-only flat array plus its grid."""
    arr = np.array(values, dtype=dtype)
    if arr.ndim == 2:
        if arr.shape[0] != arr.shape[1]:
            raise DomainError(f"2D values must be square, got shape {arr.shape}")
        if grid is None:
            grid = GridSpec(arr.shape[0])
        arr = arr.reshape(-1)
    elif arr.ndim != 1:
        raise DomainError(f"expected a flat or square 2D array, got {arr.ndim} dimensions")
    if arr.size == 0:
        raise DomainError("empty value array")
    if grid is not None and arr.size != grid.M:
        raise DomainError(f"{arr.size} values do not fit a grid with M={grid.M}")
    arr.setflags(write=False)
    return arr, grid

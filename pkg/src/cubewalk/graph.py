"""Dense adjacency matrices of cubelike graphs and their permutation decomposition.

Only meant for small n: these matrices back the structural checks and the
dense matrix-exponential cross-check, not the scalable evolution paths.
"""

from __future__ import annotations

import numpy as np

from .group import CapacityError, GroupElement, WeightFunction

MAX_DENSE_DIMENSION = 12


def _require_dense(n: int) -> None:
    if n > MAX_DENSE_DIMENSION:
        raise CapacityError(f"dense 2^n x 2^n storage is capped at n={MAX_DENSE_DIMENSION}, got n={n}")


def _xor_table(n: int) -> np.ndarray:
    idx = np.arange(1 << n)
    return idx[:, None] ^ idx[None, :]


def build_adjacency(f: WeightFunction) -> np.ndarray:
    """A[u, v] = f(u xor v) as an int64 matrix."""
    _require_dense(f.n)
    return f.weight_vector()[_xor_table(f.n)]


def regular_representation(x: GroupElement) -> np.ndarray:
    """Permutation matrix of y -> x xor y, with the 1 of column y in row x xor y."""
    _require_dense(x.n)
    return (_xor_table(x.n) == x.value).astype(np.int64)


def decompose_check(f: WeightFunction) -> bool:
    """Exact integer check that A equals sum_x f(x) * rho(x)."""
    _require_dense(f.n)
    total = np.zeros((1 << f.n, 1 << f.n), dtype=np.int64)
    for x, w in f.entries.items():
        total += w * regular_representation(x)
    return bool(np.array_equal(build_adjacency(f), total))

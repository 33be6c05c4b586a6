"""Exact walk evolution through the Walsh-Hadamard eigenbasis.

Every adjacency matrix of a Cayley graph over Z_2^n is diagonalised by the
n-fold Hadamard transform, with eigenvalue
    lambda_y = sum_x f(x) * (-1)^<x|y>
at character y. Evolution is then two transforms and a diagonal phase, in
O(n 2^n), with no dependence on the gate-level circuit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .group import CapacityError, GroupElement, MalformedInputError, WeightFunction

MAX_UNITARY_DIMENSION = 10


def fwht(values: np.ndarray) -> np.ndarray:
    """Unnormalised fast Walsh-Hadamard transform along the only axis.

    out[y] = sum_x (-1)^popcount(x & y) * values[x]; length must be a power of two.
    """
    out = np.array(values, copy=True)
    size = out.shape[0]
    if size & (size - 1) or size == 0:
        raise MalformedInputError(f"length {size} is not a power of two")
    h = 1
    while h < size:
        view = out.reshape(-1, 2, h)
        a = view[:, 0, :].copy()
        b = view[:, 1, :]
        view[:, 0, :] = a + b
        view[:, 1, :] = a - b
        h *= 2
    return out


@dataclass(frozen=True)
class Spectrum:
    n: int
    values: np.ndarray  # int64, values[y] = lambda_y

    def __getitem__(self, y: GroupElement) -> int:
        return int(self.values[y.value])


def eigenvalues(f: WeightFunction) -> Spectrum:
    return Spectrum(f.n, fwht(f.weight_vector()))


def _propagator_column(f: WeightFunction, t: float) -> np.ndarray:
    """g[w] = <w|U(t)|0>; by translation invariance <v|U(t)|u> = g[u xor v]."""
    lam = eigenvalues(f).values
    phases = np.exp(-1j * t * lam.astype(np.float64))
    return fwht(phases) / (1 << f.n)


def evolve(f: WeightFunction, start: GroupElement, t: float) -> np.ndarray:
    """Amplitudes of e^{-itA}|start> indexed by vertex."""
    if start.n != f.n:
        raise MalformedInputError(f"start has dimension {start.n}, graph has {f.n}")
    g = _propagator_column(f, t)
    return g[np.arange(1 << f.n) ^ start.value]


def full_unitary(f: WeightFunction, t: float) -> np.ndarray:
    if f.n > MAX_UNITARY_DIMENSION:
        raise CapacityError(f"full unitary is capped at n={MAX_UNITARY_DIMENSION}, got n={f.n}")
    g = _propagator_column(f, t)
    idx = np.arange(1 << f.n)
    return g[idx[:, None] ^ idx[None, :]]

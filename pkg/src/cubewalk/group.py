"""Elements of the Boolean group Z_2^n and integer weight functions on it.

Bit strings are read left to right: position 1 is the leftmost character and
the most significant bit of the integer encoding, so "011" encodes 3.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

MAX_DIMENSION = 24


class MalformedInputError(ValueError):
    """Raised for inputs that violate a structural precondition."""


class CapacityError(ValueError):
    """Raised when a dense representation would be too large."""


def _check_dimension(n: int) -> None:
    if not isinstance(n, numbers.Integral) or not 1 <= n <= MAX_DIMENSION:
        raise MalformedInputError(f"dimension must be an integer in [1, {MAX_DIMENSION}], got {n!r}")


@dataclass(frozen=True, order=True)
class GroupElement:
    """An n-bit element of Z_2^n stored as its integer encoding."""

    value: int
    n: int

    def __post_init__(self):
        _check_dimension(self.n)
        if not 0 <= self.value < (1 << self.n):
            raise MalformedInputError(f"value {self.value} does not fit in {self.n} bits")

    @classmethod
    def from_str(cls, bits: str) -> "GroupElement":
        bits = bits.strip()
        if not bits or set(bits) - {"0", "1"}:
            raise MalformedInputError(f"not a bit string: {bits!r}")
        return cls(int(bits, 2), len(bits))

    @classmethod
    def zero(cls, n: int) -> "GroupElement":
        return cls(0, n)

    @classmethod
    def unit(cls, i: int, n: int) -> "GroupElement":
        """e_i: a single 1 at position i (1-based, counted from the left)."""
        if not 1 <= i <= n:
            raise MalformedInputError(f"position {i} outside 1..{n}")
        return cls(1 << (n - i), n)

    def bit(self, i: int) -> int:
        """Bit at position i (1-based, counted from the left)."""
        return (self.value >> (self.n - i)) & 1

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(self.bit(i) for i in range(1, self.n + 1))

    def is_identity(self) -> bool:
        return self.value == 0

    def __xor__(self, other: "GroupElement") -> "GroupElement":
        return xor_add(self, other)

    def __str__(self) -> str:
        return format(self.value, f"0{self.n}b")


def xor_add(a: GroupElement, b: GroupElement) -> GroupElement:
    if a.n != b.n:
        raise MalformedInputError(f"dimension mismatch: {a.n} vs {b.n}")
    return GroupElement(a.value ^ b.value, a.n)


def hamming_weight(x: GroupElement) -> int:
    return bin(x.value).count("1")


def inner_parity(x: GroupElement, y: GroupElement) -> int:
    """<x|y> mod 2."""
    if x.n != y.n:
        raise MalformedInputError(f"dimension mismatch: {x.n} vs {y.n}")
    return bin(x.value & y.value).count("1") & 1


def all_elements(n: int) -> Iterable[GroupElement]:
    _check_dimension(n)
    return (GroupElement(v, n) for v in range(1 << n))


def odd_overlap_set(
    x: GroupElement, n: int | None = None, within: Iterable[GroupElement] | None = None
) -> set[GroupElement]:
    """All y with <x|y> odd, optionally restricted to the elements of `within`."""
    if n is not None and n != x.n:
        raise MalformedInputError(f"dimension mismatch: {x.n} vs {n}")
    pool = all_elements(x.n) if within is None else within
    return {y for y in pool if inner_parity(x, y)}


@dataclass(frozen=True)
class WeightFunction:
    """Integer weights on Z_2^n; zero weights are dropped, the identity is forbidden."""

    n: int
    entries: Mapping[GroupElement, int] = field(default_factory=dict)

    def __post_init__(self):
        _check_dimension(self.n)
        clean: dict[GroupElement, int] = {}
        for x, w in self.entries.items():
            if x.n != self.n:
                raise MalformedInputError(f"element {x} has dimension {x.n}, expected {self.n}")
            if isinstance(w, bool) or not isinstance(w, numbers.Integral):
                raise MalformedInputError(f"weight for {x} must be an integer, got {w!r}")
            if x.is_identity() and w != 0:
                raise MalformedInputError("loop weight not allowed on the identity element")
            if w != 0:
                clean[x] = int(w)
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    @classmethod
    def from_dict(cls, weights: Mapping[str, int], n: int | None = None) -> "WeightFunction":
        """Build from {"001": 4, ...}; `n` is required only when `weights` is empty."""
        elems = {GroupElement.from_str(k): w for k, w in weights.items()}
        dims = {x.n for x in elems}
        if n is None:
            if len(dims) != 1:
                raise MalformedInputError("cannot infer dimension from weights")
            n = dims.pop()
        return cls(n, elems)

    def __call__(self, x: GroupElement) -> int:
        return self.entries.get(x, 0)

    def support(self) -> list[GroupElement]:
        """Omega_f in ascending integer order."""
        return list(self.entries)

    @property
    def delta(self) -> int:
        return len(self.entries)

    def weight_vector(self) -> np.ndarray:
        """Dense length-2^n int64 vector with f(x) at index x."""
        vec = np.zeros(1 << self.n, dtype=np.int64)
        for x, w in self.entries.items():
            vec[x.value] = w
        return vec

    def __add__(self, other: "WeightFunction") -> "WeightFunction":
        if other.n != self.n:
            raise MalformedInputError(f"dimension mismatch: {self.n} vs {other.n}")
        total = dict(self.entries)
        for x, w in other.entries.items():
            total[x] = total.get(x, 0) + w
        return WeightFunction(self.n, total)

    def to_dict(self) -> dict[str, int]:
        return {str(x): w for x, w in self.entries.items()}


def sigma(f: WeightFunction) -> GroupElement:
    """Parity vector: bit i is the parity of the total weight on {y : y_i = 1}.

    Python's `%` returns a non-negative remainder, so negative weights
    contribute the parity of their absolute value.
    """
    value = 0
    for i in range(1, f.n + 1):
        mask = 1 << (f.n - i)
        total = sum(w for x, w in f.entries.items() if x.value & mask)
        if total % 2:
            value |= mask
    return GroupElement(value, f.n)

"""Dense state-vector simulation of walk circuits.

Amplitude index layout: qubit 0 is the most significant bit and the
ancilla (the last qubit) the least significant, so index = (vertex << 1) | ancilla.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .circuit import CX, H, RZ, Circuit, Gate
from .group import GroupElement, MalformedInputError

_SQRT_HALF = 1.0 / np.sqrt(2.0)
ANCILLA_TOLERANCE = 1e-9
# probabilities below this are treated as exact zeros in a Distribution
PROB_CUTOFF = 1e-16


class AncillaError(RuntimeError):
    """The ancilla did not return to |0>; the circuit is inconsistent."""


@dataclass
class StateVector:
    n_qubits: int
    amps: np.ndarray

    def norm_sq(self) -> float:
        return float(np.vdot(self.amps, self.amps).real)

    def copy(self) -> "StateVector":
        return StateVector(self.n_qubits, self.amps.copy())

    def data_amplitudes(self) -> np.ndarray:
        """Vertex-indexed amplitudes with the ancilla projected on |0>."""
        return self.amps[0::2]

    def ancilla_mass(self) -> float:
        tail = self.amps[1::2]
        return float(np.vdot(tail, tail).real)


def init_basis(n_qubits: int, index: int) -> StateVector:
    if n_qubits < 1:
        raise MalformedInputError("need at least one qubit")
    if not 0 <= index < (1 << n_qubits):
        raise MalformedInputError(f"basis index {index} out of range for {n_qubits} qubits")
    amps = np.zeros(1 << n_qubits, dtype=np.complex128)
    amps[index] = 1.0
    return StateVector(n_qubits, amps)


def _split(amps: np.ndarray, n_qubits: int, q: int) -> np.ndarray:
    return amps.reshape(1 << q, 2, 1 << (n_qubits - q - 1))


def _apply_inplace(s: StateVector, g: Gate) -> None:
    nq = s.n_qubits
    if max(g.qubits) >= nq:
        raise MalformedInputError(f"gate {g} out of range for {nq} qubits")
    if g.kind == H:
        v = _split(s.amps, nq, g.target)
        a = v[:, 0, :].copy()
        b = v[:, 1, :]
        v[:, 0, :] = (a + b) * _SQRT_HALF
        v[:, 1, :] = (a - b) * _SQRT_HALF
    elif g.kind == RZ:
        v = _split(s.amps, nq, g.target)
        v[:, 0, :] *= np.exp(-0.5j * g.theta)
        v[:, 1, :] *= np.exp(0.5j * g.theta)
    elif g.kind == CX:
        v = s.amps.reshape((2,) * nq)
        sub = np.moveaxis(v, (g.control, g.target), (0, 1))[1]
        tmp = sub[0].copy()
        sub[0] = sub[1]
        sub[1] = tmp
    else:  # pragma: no cover - Gate validates kind
        raise MalformedInputError(f"unknown gate {g.kind}")


def apply_gate(s: StateVector, g: Gate) -> StateVector:
    out = s.copy()
    _apply_inplace(out, g)
    return out


def run(c: Circuit, start: GroupElement, check_ancilla: bool = True) -> StateVector:
    """Apply `c` to |start> (x) |0>_ancilla."""
    if start.n != c.n:
        raise MalformedInputError(f"start has dimension {start.n}, circuit has {c.n}")
    s = init_basis(c.n_qubits, start.value << 1)
    for g in c.gates:
        _apply_inplace(s, g)
    if check_ancilla and s.ancilla_mass() > ANCILLA_TOLERANCE:
        raise AncillaError(f"ancilla left excited with mass {s.ancilla_mass():.3g}")
    return s


@dataclass
class Distribution:
    n: int
    probs: dict[str, float]

    def total(self) -> float:
        return float(sum(self.probs.values()))

    def to_json(self, digits: int = 12) -> dict:
        rounded = {k: round(p, digits) for k, p in self.probs.items()}
        return {"n": self.n, "probs": {k: p for k, p in rounded.items() if p > 0}}

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def distribution_from_amplitudes(n: int, data_amps: np.ndarray) -> Distribution:
    probs = np.abs(data_amps) ** 2
    nz = np.flatnonzero(probs > PROB_CUTOFF)
    return Distribution(n, {format(int(i), f"0{n}b"): float(probs[i]) for i in nz})


def measure_distribution(s: StateVector) -> Distribution:
    if s.ancilla_mass() > ANCILLA_TOLERANCE:
        raise AncillaError(f"ancilla not restored: mass {s.ancilla_mass():.3g} on |1>")
    return distribution_from_amplitudes(s.n_qubits - 1, s.data_amplitudes())


def sample(d: Distribution, shots: int, seed: int | None = None) -> dict[str, int]:
    """Multinomial shot histogram; deterministic for a fixed seed."""
    if shots < 1:
        raise MalformedInputError("shots must be at least 1")
    labels = sorted(d.probs)
    p = np.array([d.probs[k] for k in labels], dtype=np.float64)
    p = p / p.sum()
    counts = np.random.default_rng(seed).multinomial(shots, p)
    return {k: int(c) for k, c in zip(labels, counts) if c}

"""Gate-level synthesis of the walk operator e^{-itA} on a cubelike graph.

Each support element x contributes the term e^{-it f(x) X^x}, built as a
Hadamard layer, a star of CNOTs that accumulates <x|y> mod 2 on the
ancilla, RZ(2 t f(x)) on the ancilla, the mirrored CNOTs, and a closing
Hadamard layer. The terms commute, so the walk is their product in any
order; we use ascending integer order and drop the H layers that meet
between consecutive terms.

Qubit q (0-based) carries bit position q+1 of the vertex label, so qubit 0
is the leftmost character. Qubit n is the ancilla.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .group import GroupElement, MalformedInputError, WeightFunction, hamming_weight

H, CX, RZ = "h", "cx", "rz"


@dataclass(frozen=True)
class Gate:
    kind: str
    target: int
    control: int | None = None
    theta: float | None = None

    def __post_init__(self):
        if self.kind not in (H, CX, RZ):
            raise MalformedInputError(f"unknown gate kind {self.kind!r}")
        if self.target < 0:
            raise MalformedInputError("negative qubit index")
        if self.kind == CX:
            if self.control is None or self.control < 0:
                raise MalformedInputError("cx needs a non-negative control")
            if self.control == self.target:
                raise MalformedInputError("cx control and target must differ")
        if self.kind == RZ and (self.theta is None or not math.isfinite(self.theta)):
            raise MalformedInputError("rz needs a finite angle")

    @property
    def qubits(self) -> tuple[int, ...]:
        return (self.control, self.target) if self.kind == CX else (self.target,)

    def to_json(self) -> dict:
        if self.kind == H:
            return {"kind": H, "q": self.target}
        if self.kind == CX:
            return {"kind": CX, "c": self.control, "t": self.target}
        return {"kind": RZ, "q": self.target, "theta": self.theta}

    @classmethod
    def from_json(cls, obj: dict) -> "Gate":
        kind = obj.get("kind")
        if kind == H:
            return cls(H, int(obj["q"]))
        if kind == CX:
            return cls(CX, int(obj["t"]), control=int(obj["c"]))
        if kind == RZ:
            return cls(RZ, int(obj["q"]), theta=float(obj["theta"]))
        raise MalformedInputError(f"unknown gate kind {kind!r}")


def h(q: int) -> Gate:
    return Gate(H, q)


def cx(control: int, target: int) -> Gate:
    return Gate(CX, target, control=control)


def rz(q: int, theta: float) -> Gate:
    return Gate(RZ, q, theta=theta)


@dataclass(frozen=True)
class Circuit:
    """Gates over n data qubits plus the ancilla at index n."""

    n: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 1:
            raise MalformedInputError("circuit needs at least one data qubit")
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if max(g.qubits) > self.n:
                raise MalformedInputError(f"gate {g} touches a qubit beyond index {self.n}")

    @property
    def ancilla(self) -> int:
        return self.n

    @property
    def n_qubits(self) -> int:
        return self.n + 1

    def __add__(self, other: "Circuit") -> "Circuit":
        if other.n != self.n:
            raise MalformedInputError("cannot concatenate circuits of different width")
        return Circuit(self.n, self.gates + other.gates)

    def to_json(self) -> dict:
        return {"n": self.n, "gates": [g.to_json() for g in self.gates]}

    @classmethod
    def from_json(cls, obj: dict) -> "Circuit":
        return cls(int(obj["n"]), tuple(Gate.from_json(g) for g in obj["gates"]))


@dataclass(frozen=True)
class GateCounts:
    h: int
    cnot: int
    rz: int


def gate_counts(c: Circuit) -> GateCounts:
    kinds = [g.kind for g in c.gates]
    return GateCounts(h=kinds.count(H), cnot=kinds.count(CX), rz=kinds.count(RZ))


def _hadamard_layer(n: int) -> list[Gate]:
    return [h(q) for q in range(n)]


def _phase_kernel(x: GroupElement, weight: int, t: float) -> list[Gate]:
    anc = x.n
    controls = [i - 1 for i in range(1, x.n + 1) if x.bit(i)]
    ladder = [cx(q, anc) for q in controls]
    return ladder + [rz(anc, 2.0 * t * weight)] + ladder[::-1]


def synthesize_term(x: GroupElement, weight: int, t: float) -> Circuit:
    """Circuit for e^{-i t weight rho(x)} on x.n data qubits and one ancilla."""
    if x.is_identity():
        raise MalformedInputError("identity term is a loop; loops are not allowed")
    if weight == 0:
        raise MalformedInputError("zero-weight term")
    layer = _hadamard_layer(x.n)
    return Circuit(x.n, layer + _phase_kernel(x, weight, t) + layer)


def synthesize_walk(
    f: WeightFunction,
    t: float,
    optimize: bool = True,
    order: Sequence[GroupElement] | None = None,
) -> Circuit:
    """Circuit for e^{-itA}.

    With `optimize`, the H layers between consecutive terms cancel and only
    the outermost two layers remain. `order` permutes the terms (default:
    ascending support).
    """
    terms = f.support() if order is None else list(order)
    if not terms:
        raise MalformedInputError("empty support: no Hamiltonian to simulate")
    if sorted(terms) != f.support():
        raise MalformedInputError("order must be a permutation of the support")
    if not optimize:
        gates: list[Gate] = []
        for x in terms:
            gates.extend(synthesize_term(x, f(x), t).gates)
        return Circuit(f.n, gates)
    layer = _hadamard_layer(f.n)
    gates = list(layer)
    for x in terms:
        gates.extend(_phase_kernel(x, f(x), t))
    gates.extend(layer)
    return Circuit(f.n, gates)


def expected_counts(f: WeightFunction) -> GateCounts:
    """Counts of the optimized walk circuit: 2n H, 2 sum wt(x) CNOT, Delta RZ."""
    return GateCounts(
        h=2 * f.n,
        cnot=2 * sum(hamming_weight(x) for x in f.support()),
        rz=f.delta,
    )


def _format_angle(theta: float) -> str:
    return format(theta, ".17g")


def emit_qasm(c: Circuit) -> str:
    lines = [
        "OPENQASM 2.0;",
        'include "qelib1.inc";',
        f"qreg q[{c.n_qubits}];",
        f"creg c[{c.n}];",
    ]
    for g in c.gates:
        if g.kind == H:
            lines.append(f"h q[{g.target}];")
        elif g.kind == CX:
            lines.append(f"cx q[{g.control}],q[{g.target}];")
        else:
            lines.append(f"rz({_format_angle(g.theta)}) q[{g.target}];")
    lines.extend(f"measure q[{i}] -> c[{i}];" for i in range(c.n))
    return "\n".join(lines) + "\n"


_QREG = re.compile(r"^qreg\s+q\[(\d+)\];$")
_CREG = re.compile(r"^creg\s+c\[(\d+)\];$")
_H = re.compile(r"^h\s+q\[(\d+)\];$")
_CX = re.compile(r"^cx\s+q\[(\d+)\]\s*,\s*q\[(\d+)\];$")
_RZ = re.compile(r"^rz\(\s*([-+0-9.eE]+)\s*\)\s+q\[(\d+)\];$")
_MEASURE = re.compile(r"^measure\s+q\[(\d+)\]\s*->\s*c\[(\d+)\];$")


def parse_qasm(text: str) -> Circuit:
    """Read back the OpenQASM 2.0 subset written by `emit_qasm`."""
    lines = [ln.split("//")[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or lines[0] != "OPENQASM 2.0;":
        raise MalformedInputError("missing OPENQASM 2.0 header")
    n_qubits = n_clbits = None
    gates: list[Gate] = []
    for lineno, ln in enumerate(lines[1:], start=2):
        if ln.startswith("include "):
            continue
        if m := _QREG.match(ln):
            n_qubits = int(m.group(1))
        elif m := _CREG.match(ln):
            n_clbits = int(m.group(1))
        elif m := _H.match(ln):
            gates.append(h(int(m.group(1))))
        elif m := _CX.match(ln):
            gates.append(cx(int(m.group(1)), int(m.group(2))))
        elif m := _RZ.match(ln):
            gates.append(rz(int(m.group(2)), float(m.group(1))))
        elif m := _MEASURE.match(ln):
            if m.group(1) != m.group(2):
                raise MalformedInputError(f"line {lineno}: unexpected measurement mapping")
        else:
            raise MalformedInputError(f"line {lineno}: cannot parse {ln!r}")
    if n_qubits is None or n_clbits is None or n_qubits != n_clbits + 1:
        raise MalformedInputError("expected qreg of size n+1 and creg of size n")
    return Circuit(n_clbits, gates)


def dumps_json(c: Circuit) -> str:
    return json.dumps(c.to_json(), indent=None)


def loads_json(text: str) -> Circuit:
    return Circuit.from_json(json.loads(text))


def concat(circuits: Iterable[Circuit]) -> Circuit:
    circuits = list(circuits)
    out = circuits[0]
    for c in circuits[1:]:
        out = out + c
    return out

"""Perfect state transfer and periodicity at t = pi/2.

For integer weights the parity vector sigma decides the outcome: sigma = 0
means the walk is periodic at pi/2, otherwise every u transfers perfectly to
u xor sigma at pi/2.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

import numpy as np

from . import oracle
from .circuit import Circuit, synthesize_walk
from .group import GroupElement, MalformedInputError, WeightFunction, sigma
from .simulator import distribution_from_amplitudes, run

PST_TIME = math.pi / 2
FIDELITY_TOLERANCE = 1e-9


class Verdict(str, enum.Enum):
    PST = "PST"
    PERIODIC = "PERIODIC"


class VerificationError(RuntimeError):
    """A backend missed the predicted transfer; carries the observed distribution."""

    def __init__(self, message: str, distribution):
        super().__init__(message)
        self.distribution = distribution


@dataclass(frozen=True)
class PstReport:
    sigma: GroupElement
    verdict: Verdict
    source: GroupElement
    target: GroupElement
    tau: float = PST_TIME
    fidelity: float | None = None
    global_phase: complex | None = None
    backend: str | None = None

    def to_json(self) -> dict:
        out = {
            "sigma": str(self.sigma),
            "verdict": self.verdict.value,
            "tau": self.tau,
            "source": str(self.source),
            "target": str(self.target),
        }
        if self.fidelity is not None:
            out["fidelity"] = self.fidelity
        if self.global_phase is not None:
            out["global_phase"] = {"re": self.global_phase.real, "im": self.global_phase.imag}
        if self.backend is not None:
            out["backend"] = self.backend
        return out


def predict(f: WeightFunction, source: GroupElement | None = None) -> PstReport:
    # WeightFunction already rejects non-integer weights.
    s = sigma(f)
    src = GroupElement.zero(f.n) if source is None else source
    verdict = Verdict.PERIODIC if s.is_identity() else Verdict.PST
    return PstReport(sigma=s, verdict=verdict, source=src, target=src ^ s)


def evolve_on(
    f: WeightFunction,
    start: GroupElement,
    t: float,
    backend: str,
    circuit: Circuit | None = None,
) -> np.ndarray:
    """Vertex amplitudes of e^{-itA}|start> from the chosen backend."""
    if backend == "oracle":
        return oracle.evolve(f, start, t)
    if backend == "circuit":
        c = synthesize_walk(f, t) if circuit is None else circuit
        return run(c, start, check_ancilla=False).data_amplitudes().copy()
    raise MalformedInputError(f"unknown backend {backend!r}")


def confirm(
    f: WeightFunction,
    report: PstReport,
    backend: str = "oracle",
    circuit: Circuit | None = None,
    tol: float = FIDELITY_TOLERANCE,
    strict: bool = True,
) -> PstReport:
    """Evolve the source to tau and measure the amplitude at the predicted target.

    `circuit` overrides the synthesized walk circuit (circuit backend only).
    With `strict`, a fidelity below 1 - tol raises VerificationError.
    """
    amps = evolve_on(f, report.source, report.tau, backend, circuit)
    amp = complex(amps[report.target.value])
    fidelity = abs(amp)
    phase = amp / fidelity if fidelity > 0 else None
    if strict and fidelity < 1 - tol:
        dist = distribution_from_amplitudes(f.n, amps)
        raise VerificationError(
            f"{backend} backend: fidelity {fidelity:.12f} at {report.target} below 1 - {tol:g}", dist
        )
    return replace(report, fidelity=fidelity, global_phase=phase, backend=backend)


def pst_pairs(f: WeightFunction) -> list[tuple[GroupElement, GroupElement]]:
    """Perfect matching {u, u xor sigma}, each pair ordered and listed by its smaller end."""
    s = sigma(f)
    if s.is_identity():
        raise MalformedInputError("sigma is zero: the graph is periodic and has no PST pairs")
    pairs = []
    for v in range(1 << f.n):
        w = v ^ s.value
        if v < w:
            pairs.append((GroupElement(v, f.n), GroupElement(w, f.n)))
    return pairs

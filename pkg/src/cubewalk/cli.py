"""Command-line interface.

JSON goes to stdout, human-readable summaries to stderr.
Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from dataclasses import replace

import numpy as np

from . import oracle
from .circuit import RZ, Circuit, dumps_json, emit_qasm, synthesize_walk
from .graphfile import load_graph
from .group import GroupElement, MalformedInputError
from .pst import FIDELITY_TOLERANCE, PST_TIME, confirm, evolve_on, predict, pst_pairs
from .simulator import distribution_from_amplitudes, sample

EXIT_OK, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2
MAX_CIRCUIT_DIMENSION = 20

_PI_TIME = re.compile(r"^([-+]?\d*\.?\d*)\s*\*?\s*pi(?:\s*/\s*(\d+\.?\d*))?$")


def parse_time(text: str) -> float:
    """Accept plain floats and multiples of pi such as 'pi/2' or '3pi/4'."""
    text = text.strip().lower()
    m = _PI_TIME.match(text)
    if m:
        coef = m.group(1)
        if coef in ("", "+"):
            coef = 1.0
        elif coef == "-":
            coef = -1.0
        value = float(coef) * math.pi
        if m.group(2):
            value /= float(m.group(2))
        return value
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid time {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError("time must be finite")
    return value


def _emit(obj) -> None:
    print(json.dumps(obj))


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _start_element(bits: str | None, n: int) -> GroupElement:
    if bits is None:
        return GroupElement.zero(n)
    start = GroupElement.from_str(bits)
    if start.n != n:
        raise MalformedInputError(f"start {bits!r} has length {start.n}, graph has n={n}")
    return start


def cmd_sigma(args) -> int:
    f = load_graph(args.graph)
    report = predict(f)
    out = {"sigma": str(report.sigma), "verdict": report.verdict.value, "tau": report.tau}
    if not report.sigma.is_identity():
        out["pairs"] = [[str(u), str(v)] for u, v in pst_pairs(f)]
    _emit(out)
    _note(f"sigma = {report.sigma}: {report.verdict.value} at t = pi/2")
    return EXIT_OK


def cmd_circuit(args) -> int:
    f = load_graph(args.graph)
    c = synthesize_walk(f, args.time, optimize=not args.no_optimize)
    if args.format == "qasm":
        sys.stdout.write(emit_qasm(c))
    else:
        print(dumps_json(c))
    return EXIT_OK


def cmd_simulate(args) -> int:
    f = load_graph(args.graph)
    start = _start_element(args.start, f.n)
    if args.backend == "circuit" and f.n > MAX_CIRCUIT_DIMENSION:
        raise MalformedInputError(f"circuit backend supports n <= {MAX_CIRCUIT_DIMENSION}")
    amps = evolve_on(f, start, args.time, args.backend)
    dist = distribution_from_amplitudes(f.n, amps)
    out = dist.to_json()
    out.update({"time": args.time, "start": str(start), "backend": args.backend})
    if args.shots is not None:
        out["shots"] = args.shots
        out["seed"] = args.seed
        out["counts"] = sample(dist, args.shots, args.seed)
    _emit(out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    f = load_graph(args.graph)
    start = _start_element(args.start, f.n)
    amps = oracle.evolve(f, start, args.time)
    nz = np.flatnonzero(np.abs(amps) > args.cutoff)
    _emit({
        "n": f.n,
        "time": args.time,
        "start": str(start),
        "amplitudes": {
            format(int(i), f"0{f.n}b"): {"re": float(amps[i].real), "im": float(amps[i].imag)}
            for i in nz
        },
    })
    return EXIT_OK


def _fault(c: Circuit) -> Circuit:
    """Perturb the first rotation; used to exercise the failure path."""
    gates = list(c.gates)
    for i, g in enumerate(gates):
        if g.kind == RZ:
            gates[i] = replace(g, theta=g.theta + 0.5)
            break
    return Circuit(c.n, gates)


def cmd_verify(args) -> int:
    f = load_graph(args.graph)
    if f.n > MAX_CIRCUIT_DIMENSION:
        raise MalformedInputError(f"circuit backend supports n <= {MAX_CIRCUIT_DIMENSION}")
    if f.delta == 0:
        raise MalformedInputError("empty support: no Hamiltonian to simulate")
    prediction = predict(f)
    c = synthesize_walk(f, prediction.tau)
    if args.inject_fault:
        c = _fault(c)
    via_circuit = confirm(f, prediction, "circuit", circuit=c, tol=args.tol, strict=False)
    via_oracle = confirm(f, prediction, "oracle", tol=args.tol, strict=False)
    amps_c = evolve_on(f, prediction.source, prediction.tau, "circuit", circuit=c)
    amps_o = evolve_on(f, prediction.source, prediction.tau, "oracle")
    deviation = float(np.max(np.abs(amps_c - amps_o)))
    ok = (
        via_circuit.fidelity >= 1 - args.tol
        and via_oracle.fidelity >= 1 - args.tol
        and deviation <= args.tol
    )
    out = {
        "prediction": prediction.to_json(),
        "circuit_fidelity": via_circuit.fidelity,
        "oracle_fidelity": via_oracle.fidelity,
        "max_backend_deviation": deviation,
        "ok": ok,
    }
    if not ok:
        out["circuit_distribution"] = distribution_from_amplitudes(f.n, amps_c).to_json()["probs"]
        out["oracle_distribution"] = distribution_from_amplitudes(f.n, amps_o).to_json()["probs"]
    _emit(out)
    _note(
        f"{'PASS' if ok else 'FAIL'}: sigma={prediction.sigma} {prediction.verdict.value} "
        f"circuit={via_circuit.fidelity:.12f} oracle={via_oracle.fidelity:.12f} dev={deviation:.3g}"
    )
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubewalk", description="Quantum walks and perfect state transfer on cubelike graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_arg(p):
        p.add_argument("--graph", required=True, help="graph file ('n <dim>' then '<bits> <weight>' lines)")

    def time_arg(p):
        p.add_argument("--time", type=parse_time, default=PST_TIME, help="evolution time (float or e.g. pi/2)")

    p = sub.add_parser("sigma", help="predict PST pairs or periodicity at t=pi/2")
    graph_arg(p)
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("circuit", help="emit the walk circuit")
    graph_arg(p)
    time_arg(p)
    p.add_argument("--format", choices=("qasm", "json"), default="qasm")
    p.add_argument("--no-optimize", action="store_true", help="keep the H layers between terms")
    p.set_defaults(func=cmd_circuit)

    p = sub.add_parser("simulate", help="probability distribution after evolving a basis state")
    graph_arg(p)
    time_arg(p)
    p.add_argument("--start", default=None, help="start vertex bit string (default all zeros)")
    p.add_argument("--backend", choices=("circuit", "oracle"), default="circuit")
    p.add_argument("--shots", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("oracle", help="exact amplitudes from the spectral evolution")
    graph_arg(p)
    time_arg(p)
    p.add_argument("--start", default=None)
    p.add_argument("--cutoff", type=float, default=1e-12, help="omit amplitudes with smaller modulus")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check the predicted PST on both backends")
    graph_arg(p)
    p.add_argument("--tol", type=float, default=FIDELITY_TOLERANCE)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "shots", None) is not None and args.shots < 1:
        _note("error: --shots must be at least 1")
        return EXIT_USAGE
    try:
        return args.func(args)
    except (MalformedInputError, OSError) as exc:
        _note(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

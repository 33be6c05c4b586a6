"""Prints sigma, verdict, gate counts and the t = pi/2 distribution for the bundled graphs."""

import math
from pathlib import Path

from cubewalk.circuit import gate_counts, synthesize_walk
from cubewalk.graphfile import load_graph
from cubewalk.group import GroupElement
from cubewalk.pst import confirm, predict
from cubewalk.simulator import measure_distribution, run

GRAPHS = Path(__file__).resolve().parent.parent / "graphs"

for path in sorted(GRAPHS.glob("*.txt")):
    f = load_graph(path)
    report = confirm(f, predict(f), backend="circuit")
    c = synthesize_walk(f, math.pi / 2)
    dist = measure_distribution(run(c, GroupElement.zero(f.n)))
    print(f"{path.stem:10s} sigma={report.sigma} {report.verdict.value:8s} "
          f"fidelity={report.fidelity:.12f} phase={report.global_phase:.3f} "
          f"counts={gate_counts(c)} probs={dist.to_json()['probs']}")

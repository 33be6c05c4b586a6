"""Continuous-time quantum walks on integer-weighted cubelike graphs."""

from .circuit import (
    Circuit,
    Gate,
    GateCounts,
    emit_qasm,
    gate_counts,
    parse_qasm,
    synthesize_term,
    synthesize_walk,
)
from .graph import build_adjacency, decompose_check, regular_representation
from .group import (
    CapacityError,
    GroupElement,
    MalformedInputError,
    WeightFunction,
    hamming_weight,
    odd_overlap_set,
    sigma,
    xor_add,
)
from .oracle import eigenvalues, evolve, full_unitary
from .pst import PstReport, Verdict, VerificationError, confirm, predict, pst_pairs
from .simulator import (
    Distribution,
    StateVector,
    apply_gate,
    init_basis,
    measure_distribution,
    run,
    sample,
)

__version__ = "0.1.0"

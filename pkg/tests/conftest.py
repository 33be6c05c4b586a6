import math

import numpy as np
import pytest
import scipy.linalg
from hypothesis import strategies as st

from cubewalk.graph import build_adjacency
from cubewalk.group import GroupElement, WeightFunction

HALF_PI = math.pi / 2

# Graphs from the worked examples.
PAPER_GRAPHS = {
    "c4": {"01": 1, "10": 1},
    "q3": {"001": 1, "010": 1, "100": 1},
    "fig2": {"001": 1, "010": 1, "011": 1, "100": 1, "111": 1},
    "weighted1": {"001": 4, "011": 8, "101": 3},
    "weighted2": {"010": 4, "011": 7, "100": 8, "101": 2, "110": 5},
    "periodic": {"11": 2},
}


@pytest.fixture(params=sorted(PAPER_GRAPHS))
def paper_graph(request):
    return WeightFunction.from_dict(PAPER_GRAPHS[request.param])


def random_weight_function(rng, n, low=-8, high=8, size=None):
    """Support of `size` distinct non-identity elements (random size if None)."""
    size = rng.integers(1, 2**n) if size is None else size
    support = rng.choice(np.arange(1, 2**n), size=size, replace=False)
    entries = {}
    for x in support:
        w = 0
        while w == 0:
            w = int(rng.integers(low, high + 1))
        entries[GroupElement(int(x), n)] = w
    return WeightFunction(n, entries)


@st.composite
def weight_functions(draw, min_n=1, max_n=6, low=-8, high=8):
    n = draw(st.integers(min_n, max_n))
    values = st.integers(1, 2**n - 1)
    weights = draw(st.dictionaries(values, st.integers(low, high), min_size=0, max_size=min(2**n - 1, 12)))
    return WeightFunction(n, {GroupElement(x, n): w for x, w in weights.items()})


def nonempty_weight_functions(**kw):
    return weight_functions(**kw).filter(lambda f: f.delta > 0)


def dense_walk(f, t):
    """e^{-itA} by scipy's Pade scaling-and-squaring on the dense adjacency."""
    return scipy.linalg.expm(-1j * t * build_adjacency(f).astype(float))


def character_sum(f, y):
    """lambda_y by direct summation over the support."""
    return sum(w * (-1) ** bin(x.value & y).count("1") for x, w in f.entries.items())


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

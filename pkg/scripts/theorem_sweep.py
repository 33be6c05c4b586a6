"""Random sweep of the parity criterion against the exact evolution.

    python scripts/theorem_sweep.py --trials 2000 --max-n 8 --backend both
"""

import argparse
import json
import math
import time

import numpy as np

from cubewalk.group import GroupElement, WeightFunction
from cubewalk.pst import confirm, predict


def random_function(rng, n, wmax):
    size = int(rng.integers(1, 2**n))
    support = rng.choice(np.arange(1, 2**n), size=size, replace=False)
    weights = rng.integers(1, wmax + 1, size=size) * rng.choice([-1, 1], size=size)
    return WeightFunction(n, {GroupElement(int(x), n): int(w) for x, w in zip(support, weights)})


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--min-n", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--max-weight", type=int, default=8)
    ap.add_argument("--backend", choices=("oracle", "circuit", "both"), default="oracle")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    backends = ("oracle", "circuit") if args.backend == "both" else (args.backend,)
    worst = {b: 1.0 for b in backends}
    verdicts = {"PST": 0, "PERIODIC": 0}
    t0 = time.perf_counter()
    for _ in range(args.trials):
        f = random_function(rng, int(rng.integers(args.min_n, args.max_n + 1)), args.max_weight)
        report = predict(f)
        verdicts[report.verdict.value] += 1
        for b in backends:
            worst[b] = min(worst[b], confirm(f, report, backend=b, strict=False).fidelity)
    print(json.dumps({
        "trials": args.trials,
        "verdicts": verdicts,
        "min_fidelity": worst,
        "tau": math.pi / 2,
        "seconds": round(time.perf_counter() - t0, 3),
    }, indent=2))


if __name__ == "__main__":
    main()

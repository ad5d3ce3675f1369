"""Track the smallest Brouwer / Ashraf slack over G(n, p) samples across a grid of densities.

    python scripts/gnp_hunt.py --n 12 --samples 500 --seed 1
"""

import argparse

import numpy as np

from qbounds.bounds import conjecture_check, prepare
from qbounds.graph import FamilySpec, generate, to_graph6


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=12)
    ap.add_argument("--samples", type=int, default=500)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    print(f"{'p':>6}{'conjecture':>12}{'min slack':>14}{'k':>4}  witness")
    for i, p in enumerate(np.linspace(0.1, 0.9, 9)):
        best = {}
        spec = FamilySpec("gnp", n=args.n, p=float(p), seed=args.seed + i, samples=args.samples)
        for g in generate(spec):
            d = prepare(g)
            for which in ("brouwer", "ashraf"):
                c = conjecture_check(d, which)
                if which not in best or c.min_slack < best[which][0]:
                    best[which] = (c.min_slack, c.min_k, to_graph6(g))
        for which, (slack, k, g6) in best.items():
            print(f"{p:>6.2f}{which:>12}{slack:>14.6f}{k:>4}  {g6}")


if __name__ == "__main__":
    main()

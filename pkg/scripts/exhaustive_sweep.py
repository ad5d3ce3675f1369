"""Sweep every connected labeled graph up to a given order and tabulate where each bound is tight.

    python scripts/exhaustive_sweep.py --max-n 6

Prints, per bound, how many tight instances fall on complete graphs, stars and
everything else, plus the smallest residual observed.
"""

import argparse
import time
from collections import defaultdict

from qbounds.bounds import evaluate_all, prepare
from qbounds.graph import FamilySpec, generate


def family(g):
    if g.is_complete():
        return "complete"
    if g.m == g.n - 1 and max(g.degrees) == g.n - 1:
        return "star"
    return "other"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()

    tight = defaultdict(lambda: defaultdict(int))
    worst = defaultdict(lambda: float("inf"))
    t0 = time.time()
    count = 0
    for n in range(2, args.max_n + 1):
        for g in generate(FamilySpec("exhaustive", n=n, connected_only=True)):
            count += 1
            reports, _ = evaluate_all(prepare(g))
            for r in reports:
                # k = n is tight by construction; keep it out of the catalogue
                if r.k == n:
                    continue
                key = r.name if r.k is None else f"{r.name}[k={'1' if r.k == 1 else 'n-1' if r.k == n - 1 else 'mid'}]"
                worst[key] = min(worst[key], r.residual)
                if r.tight:
                    tight[key][family(g)] += 1

    print(f"{count} connected graphs, n <= {args.max_n}, {time.time() - t0:.1f}s")
    print(f"{'bound':<40}{'complete':>10}{'star':>8}{'other':>8}{'min residual':>16}")
    for key in sorted(worst):
        t = tight[key]
        print(f"{key:<40}{t['complete']:>10}{t['star']:>8}{t['other']:>8}{worst[key]:>16.3e}")


if __name__ == "__main__":
    main()

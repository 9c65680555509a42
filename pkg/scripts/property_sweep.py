#!/usr/bin/env python3
"""Empirical approximation ratios on random small instances.

    python scripts/property_sweep.py --instances 500 --max-edges 12
"""

import argparse
import random
import statistics
from fractions import Fraction

from minecc.colorpair import colorpair_flow
from minecc.exact import brute_force_minecc
from minecc.hypergraph import generate_random
from minecc.localratio import local_ratio
from minecc.vcflow import vc_flow


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--instances", type=int, default=300)
    parser.add_argument("--max-nodes", type=int, default=10)
    parser.add_argument("--max-edges", type=int, default=14)
    parser.add_argument("--max-colors", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    ratios = {"colorpair": [], "vcflow": [], "localratio": []}
    worst_vs_bound = Fraction(0)
    for i in range(args.instances):
        n = rng.randint(2, args.max_nodes)
        H = generate_random(n, rng.randint(1, args.max_edges), rng.randint(2, args.max_colors),
                            rng.randint(1, min(4, n)), 5, seed=rng.randrange(2**32))
        opt = brute_force_minecc(H)[1]
        if opt == 0:
            continue
        cp = colorpair_flow(H)
        assert vc_flow(H).lower_bound == cp.lower_bound
        for name, result in (("colorpair", cp), ("vcflow", vc_flow(H)), ("localratio", local_ratio(H))):
            ratios[name].append(result.objective / opt)
        k = cp.k_present
        worst_vs_bound = max(worst_vs_bound, cp.objective / ((2 - Fraction(2, k)) * cp.lower_bound))

    print(f"{'algorithm':<12}{'instances':>10}{'mean':>8}{'max':>8}")
    for name, values in ratios.items():
        print(f"{name:<12}{len(values):>10}{statistics.fmean(values):>8.3f}{max(values):>8.3f}")
    print(f"worst colorpair objective / ((2-2/k) * LP) = {float(worst_vs_bound):.3f}")


if __name__ == "__main__":
    main()

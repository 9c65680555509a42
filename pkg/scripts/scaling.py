#!/usr/bin/env python3
"""Network size and runtime of ColorPair-Flow vs VC-Flow as instances grow.

The node set is fixed, so degrees grow with the edge count: bad pairs grow
quadratically while the color-pair network stays linear in mu.

    python scripts/scaling.py --sizes 500 1000 2000 4000
"""

import argparse
import time

from minecc.colorpair import colorpair_flow
from minecc.hypergraph import BadPairExplosion, generate_random
from minecc.localratio import local_ratio_ecc
from minecc.vcflow import vc_flow


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--sizes", type=int, nargs="+", default=[500, 1000, 2000, 4000])
    parser.add_argument("--nodes", type=int, default=300)
    parser.add_argument("--colors", type=int, default=8)
    parser.add_argument("--max-size", type=int, default=6)
    parser.add_argument("--pair-cap", type=int, default=2_000_000)
    args = parser.parse_args()

    cols = ["m", "mu", "bad_pairs", "cp_arcs", "vc_arcs", "cp_s", "vc_s", "lr_s", "lr_work", "LP", "cp_ratio"]
    print("\t".join(cols))
    for m in args.sizes:
        H = generate_random(args.nodes, m, args.colors, args.max_size, 10, seed=m)
        cp, cp_s = timed(colorpair_flow, H)
        try:
            vc, vc_s = timed(vc_flow, H, args.pair_cap)
            pairs, vc_arcs = vc.counters["bad_pairs"], vc.counters["network_arcs"]
            assert vc.lower_bound == cp.lower_bound
        except BadPairExplosion:
            pairs = vc_arcs = vc_s = "cap"
        counters = {}
        _, lr_s = timed(local_ratio_ecc, H, counters)
        row = [m, H.mu, pairs, cp.counters["network_arcs"], vc_arcs,
               round(cp_s, 3), vc_s if isinstance(vc_s, str) else round(vc_s, 3),
               round(lr_s, 4), counters["work"], str(cp.lower_bound), round(float(cp.ratio), 3)]
        print("\t".join(map(str, row)))


if __name__ == "__main__":
    main()

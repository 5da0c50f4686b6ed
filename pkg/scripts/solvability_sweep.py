"""Solve L a = 1 for random symmetric unit-diagonal L and report rank statistics per size."""
import argparse
import time

import numpy as np

from parallelise.gf2 import Gf2Vector, LinkingParity, gf2_rank, solve_framing_system


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[1, 2, 4, 8, 16, 32, 64, 128])
    parser.add_argument("--trials", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    print(f"{'n':>5} {'trials':>7} {'solved':>7} {'full rank':>10} {'mean rank':>10} {'secs':>7}")
    for n in args.sizes:
        start = time.perf_counter()
        solved = full = 0
        ranks = []
        for _ in range(args.trials):
            lp = LinkingParity.random(n, rng)
            a = solve_framing_system(lp)
            solved += lp.matrix.matvec(a) == Gf2Vector.ones(n)
            r = gf2_rank(lp.matrix)
            ranks.append(r)
            full += r == n
        secs = time.perf_counter() - start
        print(f"{n:>5} {args.trials:>7} {solved:>7} {full:>10} {np.mean(ranks):>10.2f} {secs:>7.2f}")


if __name__ == "__main__":
    main()

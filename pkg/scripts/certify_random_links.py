"""Certify random closed braids end to end and print a few example certificates."""
import argparse

import numpy as np

from parallelise.braids import format_braid, linking_parity, random_braid
from parallelise.framing import compute_certificate, reverify_certificate


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=500)
    parser.add_argument("--max-strands", type=int, default=6)
    parser.add_argument("--max-length", type=int, default=12)
    parser.add_argument("--show", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    valid = 0
    for k in range(args.count):
        b = random_braid(rng, int(rng.integers(1, args.max_strands + 1)), int(rng.integers(0, args.max_length + 1)))
        lp = linking_parity(b)
        cert = compute_certificate(lp)
        ok = cert.valid and set(reverify_certificate(cert, lp).values()) == {1}
        valid += ok
        if k < args.show:
            print(f"{format_braid(b):<40} n={lp.n}  a={''.join(map(str, cert.a))}  a_inf=1  valid={ok}")
    print(f"{valid}/{args.count} certificates valid")


if __name__ == "__main__":
    main()

"""Tabulate self-linking numbers of knot closures of all short braid words.

Also checks every component against the doubled-braid push-off.
"""
import argparse
from collections import Counter

from parallelise.braids import all_braids, closure_components, is_knot, push_off_linking, self_linking


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--strands", type=int, default=4)
    parser.add_argument("--max-length", type=int, default=6)
    parser.add_argument("--no-oracle", action="store_true")
    args = parser.parse_args()

    values = Counter()
    words = mismatches = 0
    for n in range(1, args.strands + 1):
        for b in all_braids(n, args.max_length):
            words += 1
            if is_knot(b):
                values[self_linking(b)] += 1
            if not args.no_oracle:
                for c in range(closure_components(b).count):
                    mismatches += self_linking(b, c) != push_off_linking(b, c)
    print(f"words: {words}  knot closures: {sum(values.values())}  oracle mismatches: {mismatches}")
    for sl in sorted(values):
        print(f"  sl = {sl:>3}: {values[sl]}")
    even = sum(v for k, v in values.items() if k % 2 == 0)
    print(f"even self-linking numbers seen: {even}")


if __name__ == "__main__":
    main()

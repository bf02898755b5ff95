"""Covers and linear extensions of every 2-chain of one size, by splice shape.

    python scripts/extension_table.py --size 8
"""

import argparse

from twochains.bichain import enumerate_two_chains
from twochains.counting import extremal_bounds, two_chain_stats


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=8)
    args = ap.parse_args()
    rows = [two_chain_stats(p) for p in enumerate_two_chains(args.size)]
    print(f"{'sequence':<{max(args.size - 2, 8)}}  {'shape':<20} covers  extensions")
    for st in rows:
        shape = "(" + ",".join(map(str, st.shape)) + ")"
        print(f"{st.sequence:<{max(args.size - 2, 8)}}  {shape:<20} {st.covers:>6}  {st.linear_extensions:>10}")
    c_min, c_max, l_min, l_max = extremal_bounds(args.size)
    print(f"bounds: covers {c_min}..{c_max}, extensions {l_min}..{l_max}")


if __name__ == "__main__":
    main()

"""Labelled 3-chain census and the non-splice check, printed as a table.

    python scripts/rchain_census.py [--max-n 7] [--r 3]
"""

import argparse
import time

from twochains.rchain import (
    dimension_of,
    labelled_rchain_census,
    make_qnr,
    r_chain_classes,
    splice_witnesses,
    three_chain_fixture,
)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--r", type=int, default=3)
    args = ap.parse_args()
    r = args.r

    print(f"{'n':>3} {'r^(n-r)':>8} {'built':>6} {'distinct':>9} {'valid':>6} {'exhaustive':>11} {'classes':>8} {'secs':>6}")
    for n in range(r, args.max_n + 1):
        t = time.perf_counter()
        rep = labelled_rchain_census(n, r)
        classes = len(r_chain_classes(n, r))
        print(
            f"{n:>3} {rep.labelled_count_conjectured:>8} {rep.generated_sequences:>6} "
            f"{rep.generated_distinct:>9} {rep.labelled_count_observed:>6} "
            f"{rep.exhaustive_count:>11} {classes:>8} {time.perf_counter() - t:>6.1f}"
        )

    if r == 3 and args.max_n >= 7:
        fixture = three_chain_fixture()
        classes = {k: r_chain_classes(k, 3) for k in range(4, 7)}
        print()
        print(f"fixture dimension: {dimension_of(fixture)}")
        print(f"Q(7)^3 dimension: {dimension_of(make_qnr(7, 3))}")
        print(f"splice witnesses for the fixture: {len(splice_witnesses(fixture, 3, classes))}")
        sizes7 = {k: classes[k] for k in classes}
        lone = [p for p in r_chain_classes(7, 3) if not splice_witnesses(p, 3, sizes7)]
        print(f"7-element 3-chain classes with no splice witness: {len(lone)}")


if __name__ == "__main__":
    main()

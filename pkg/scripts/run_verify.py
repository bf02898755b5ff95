"""Run every verification suite and print timings per suite.

    python scripts/run_verify.py [--max-n N]
"""

import argparse
import time

from twochains.verify import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=None)
    args = ap.parse_args()
    failed = 0
    for suite in SUITES:
        t = time.perf_counter()
        results = run_suite(suite, args.max_n)
        elapsed = time.perf_counter() - t
        print(f"== {suite} ({elapsed:.1f}s)")
        for res in results:
            tag = ("finding" if res.experimental else "pass") if res.passed else ("FINDING" if res.experimental else "FAIL")
            failed += not res.passed and not res.experimental
            print(f"   {tag:<8}{res.name}: {res.detail}")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()

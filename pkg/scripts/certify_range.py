#!/usr/bin/env python3
"""Decide, under GRH, which approximation is better for every odd prime up to --q-max."""

import argparse
import collections
import time

from cyclokit.decide import Budget, decide_range, verify
from cyclokit.primes import build_prime_table


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q-max", type=int, default=500)
    ap.add_argument("--x-max", type=int, default=Budget.x_max)
    ap.add_argument("--y-max", type=int, default=Budget.y_max)
    args = ap.parse_args(argv)
    t0 = time.perf_counter()
    budget = Budget(args.x_max, args.y_max)
    table = build_prime_table(budget.sieve_limit)
    ds = decide_range(args.q_max, budget, table)
    for d in ds:
        c = d.certificate
        print(d.q, d.verdict.value, c.path.value, c.x or "-", c.y or "-", f"{c.bound_lo:.6f}", f"{c.bound_hi:.6f}", sep="\t")
    tally = collections.Counter(d.verdict.value for d in ds)
    ok = all(verify(d, table) for d in ds)
    print(f"# {dict(tally)}; certificates replay: {ok}; {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()

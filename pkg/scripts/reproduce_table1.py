#!/usr/bin/env python3
"""Recompute the Euler-Kronecker table and flag cells that disagree with the printed one."""

import argparse
import sys
from decimal import ROUND_CEILING, ROUND_DOWN, ROUND_FLOOR, Decimal

from cyclokit import build_order_table, build_prime_table, cyc, ihara_bounds
from cyclokit.published import EK_TABLE


def q4(v, places, mode):
    return Decimal(repr(v)).quantize(Decimal(1).scaleb(-places), rounding=mode)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, nargs="*", help="restrict to these rows")
    args = ap.parse_args(argv)
    rows = [r for r in EK_TABLE if not args.q or r.q in args.q]
    table = build_prime_table(max([10**6] + [r.x for r in rows]))
    bad = 0
    print("q\tcyc_1e5\tcyc_1e6\tlow\tupp\tx\ttrue_in_bracket\tmismatch")
    for r in rows:
        o = build_order_table(r.q, table)
        b = ihara_bounds(r.q, r.x, o)
        got = {
            "cyc_1e5": q4(cyc(r.q, 10**5, o), 4, ROUND_DOWN),
            "cyc_1e6": q4(cyc(r.q, 10**6, o), 4, ROUND_DOWN),
            "low": q4(b.lo, 3, ROUND_FLOOR),
            "upp": q4(b.hi, 3, ROUND_CEILING),
        }
        miss = [k for k, v in got.items() if v != Decimal(getattr(r, k))]
        bad += len(miss)
        inside = b.lo <= float(r.true) <= b.hi
        print(r.q, *got.values(), r.x, inside, ",".join(miss) or "-", sep="\t")
    print(f"# {bad} mismatched cells", file=sys.stderr)


if __name__ == "__main__":
    main()

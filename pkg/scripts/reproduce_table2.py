#!/usr/bin/env python3
"""Recompute the B_{f_q} table: J sums, the B bracket and the v(q) bracket."""

import argparse
from decimal import ROUND_DOWN, Decimal

from cyclokit import bfq_bracket, build_order_table, build_prime_table, j_fq, v_bracket
from cyclokit.published import BFQ_TABLE


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--x", type=float, default=2e6)
    ap.add_argument("--y", type=float, default=1e6)
    args = ap.parse_args(argv)
    x, y = int(args.x), int(args.y)
    table = build_prime_table(max(10**7, x, y))
    print("q\tJ_1e5\tJ_1e6\tJ_1e7\tB_lo\tB_hi\tB_printed_inside\tv_lo\tv_hi\tv_printed")
    for r in BFQ_TABLE:
        o = build_order_table(r.q, table)
        js = [Decimal(repr(j_fq(r.q, n, table))).quantize(Decimal("0.0001"), ROUND_DOWN) for n in (10**5, 10**6, 10**7)]
        b = bfq_bracket(r.q, x, y, o)
        v = v_bracket(r.q, 10**6, o)
        print(r.q, *js, f"{b.lo:.6f}", f"{b.hi:.6f}", float(r.true) in b, f"{v.lo:.7f}", f"{v.hi:.7f}", r.v, sep="\t")


if __name__ == "__main__":
    main()

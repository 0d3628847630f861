"""Command-line entry point: constants, table reproduction, counting, decisions."""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from decimal import ROUND_CEILING, ROUND_DOWN, ROUND_FLOOR, ROUND_HALF_EVEN, Decimal

from . import published
from .asymptotics import alpha_q, approx_report, e0
from .bfq import bfq_bracket, j_fq
from .decide import Budget, decide, decide_range
from .ek import cyc, ihara_bounds
from .errors import DomainError, RangeError, ResourceError
from .euler_products import c_constant, v_bracket
from .orders import build_order_table
from .primes import build_prime_table, require_odd_prime

DEFAULT_SIEVE_LIMIT = 10**7
EXIT_USAGE = 2
EXIT_RANGE = 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    q: int | None = None
    x: int | None = None
    y: int | None = None
    sieve_limit: int = DEFAULT_SIEVE_LIMIT
    output_format: str = "tsv"
    precision: int = 5
    match_paper: bool = False

    def require_sieve(self, *points: int) -> None:
        need = max(p for p in points if p is not None)
        if self.sieve_limit < need:
            raise RangeError(f"sieve limit {self.sieve_limit} is below required {need}")


class Formatter:
    """Decimal rendering: round-half-even by default, truncation to match the tables.

    Bracket endpoints under truncation are rounded outward, so the printed
    interval still contains the computed one.
    """

    def __init__(self, digits: int, truncate: bool):
        self.quantum = Decimal(1).scaleb(-digits)
        self.truncate = truncate

    def _q(self, v, mode) -> str:
        if v is None or (isinstance(v, float) and not math.isfinite(v)):
            return "-"
        return str(Decimal(repr(float(v))).quantize(self.quantum, rounding=mode))

    def num(self, v) -> str:
        return self._q(v, ROUND_DOWN if self.truncate else ROUND_HALF_EVEN)

    def lo(self, v) -> str:
        return self._q(v, ROUND_FLOOR if self.truncate else ROUND_HALF_EVEN)

    def hi(self, v) -> str:
        return self._q(v, ROUND_CEILING if self.truncate else ROUND_HALF_EVEN)


def _emit(cfg: RunConfig, header: list[str], rows: list[dict], fmt_row, out) -> None:
    if cfg.output_format == "json-lines":
        for r in rows:
            out.write(json.dumps(_json_safe(r), sort_keys=False) + "\n")
        return
    out.write("#" + "\t".join(header) + "\n")
    for r in rows:
        out.write("\t".join(fmt_row(r)) + "\n")


def _json_safe(r: dict) -> dict:
    return {k: (None if isinstance(v, float) and not math.isfinite(v) else v) for k, v in r.items()}


def _grh(flag: bool) -> str:
    return "GRH" if flag else "-"


def _q_list(text: str | None, default) -> list[int]:
    if text is None:
        return list(default)
    if not text.strip():
        return []
    return [require_odd_prime(int(t)) for t in text.split(",") if t.strip()]


def cmd_constants(cfg: RunConfig, out=sys.stdout) -> None:
    q = require_odd_prime(cfg.q)
    y_c = cfg.y or cfg.sieve_limit
    y_v = cfg.y or min(10**6, cfg.sieve_limit)
    cfg.require_sieve(y_c, y_v, 3)
    table = build_prime_table(max(y_c, y_v))
    orders = build_order_table(q, table)
    cb = c_constant(q, y_c, orders)
    vb = v_bracket(q, y_v, orders)
    rows = [
        {"constant": "C", "q": q, "lo": cb.lo, "hi": cb.hi, "point": cb.y_or_x, "grh": False},
        {"constant": "v", "q": q, "lo": vb.lo, "hi": vb.hi, "point": vb.y_or_x, "grh": False},
    ]
    try:
        a = alpha_q(q)
    except DomainError:
        a = None
    if a is not None:
        # e0 decreases in C, so the C bracket maps to a reversed e0 bracket
        rows.append({"constant": "alpha", "q": q, "lo": a, "hi": a, "point": None, "grh": False})
        rows.append(
            {"constant": "e0", "q": q, "lo": e0(q, cb.hi, a), "hi": e0(q, cb.lo, a), "point": cb.y_or_x, "grh": False}
        )
    f = Formatter(cfg.precision, cfg.match_paper)
    _emit(
        cfg,
        ["constant", "q", "lo", "hi", "point", "grh"],
        rows,
        lambda r: [r["constant"], str(r["q"]), f.lo(r["lo"]), f.hi(r["hi"]), str(r["point"] or "-"), _grh(r["grh"])],
        out,
    )


def cmd_table1(cfg: RunConfig, q_list: list[int], out=sys.stdout) -> None:
    xs = {r.q: r.x for r in published.EK_TABLE}
    plan = [(q, cfg.x or xs.get(q, 10**6)) for q in q_list]
    cfg.require_sieve(10**6, *(x for _, x in plan))
    rows = []
    if plan:
        table = build_prime_table(max([10**6] + [x for _, x in plan]))
        for q, x in plan:
            orders = build_order_table(q, table)
            b = ihara_bounds(q, x, orders)
            rows.append(
                {
                    "q": q,
                    "cyc_1e5": cyc(q, 10**5, orders),
                    "cyc_1e6": cyc(q, 10**6, orders),
                    "low": b.lo,
                    "upp": b.hi,
                    "grh": True,
                    "x": x,
                    "true": None,
                }
            )
    f3 = Formatter(3 if cfg.match_paper else cfg.precision, cfg.match_paper)
    f4 = Formatter(4 if cfg.match_paper else cfg.precision, cfg.match_paper)
    _emit(
        cfg,
        ["q", "cyc_1e5", "cyc_1e6", "low", "upp", "grh", "x", "true"],
        rows,
        lambda r: [
            str(r["q"]),
            f4.num(r["cyc_1e5"]),
            f4.num(r["cyc_1e6"]),
            f3.lo(r["low"]),
            f3.hi(r["upp"]),
            _grh(r["grh"]),
            str(r["x"]),
            "-",
        ],
        out,
    )


def cmd_table2(cfg: RunConfig, q_list: list[int], out=sys.stdout) -> None:
    x = cfg.x or 2 * 10**6
    y = cfg.y or 10**6
    cfg.require_sieve(10**7, x, y)
    rows = []
    if q_list:
        table = build_prime_table(max(10**7, x, y))
        for q in q_list:
            orders = build_order_table(q, table)
            b = bfq_bracket(q, x, y, orders)
            v = v_bracket(q, 10**6, orders)
            rows.append(
                {
                    "q": q,
                    "j_1e5": j_fq(q, 10**5, table),
                    "j_1e6": j_fq(q, 10**6, table),
                    "j_1e7": j_fq(q, 10**7, table),
                    "b_lo": b.lo,
                    "b_hi": b.hi,
                    "grh": True,
                    "v_lo": v.lo,
                    "v_hi": v.hi,
                    "x": x,
                    "y": y,
                }
            )
    f4 = Formatter(4 if cfg.match_paper else cfg.precision, cfg.match_paper)
    f5 = Formatter(cfg.precision, cfg.match_paper)
    _emit(
        cfg,
        ["q", "J_1e5", "J_1e6", "J_1e7", "B_lo", "B_hi", "grh", "v_lo", "v_hi"],
        rows,
        lambda r: [
            str(r["q"]),
            f4.num(r["j_1e5"]),
            f4.num(r["j_1e6"]),
            f4.num(r["j_1e7"]),
            f5.lo(r["b_lo"]),
            f5.hi(r["b_hi"]),
            _grh(r["grh"]),
            f5.lo(r["v_lo"]),
            f5.hi(r["v_hi"]),
        ],
        out,
    )


def cmd_count(cfg: RunConfig, out=sys.stdout) -> None:
    q = require_odd_prime(cfg.q)
    x = cfg.x or 10**6
    if x < 2:
        raise DomainError("x must be >= 2")
    cfg.require_sieve(x)
    table = build_prime_table(cfg.sieve_limit)
    cb = c_constant(q, cfg.sieve_limit, build_order_table(q, table))
    rep = approx_report(q, x, e0(q, cb.mid, alpha_q(q)), table)
    row = {
        "q": rep.q,
        "x": rep.x,
        "exact": rep.exact,
        "naive": rep.naive,
        "ramanujan": rep.ramanujan,
        "err_naive": rep.err_naive,
        "err_ram": rep.err_ram,
    }
    f = Formatter(cfg.precision, cfg.match_paper)
    _emit(
        cfg,
        list(row),
        [row],
        lambda r: [str(r["q"]), str(r["x"]), str(r["exact"])]
        + [f.num(r[k]) for k in ("naive", "ramanujan", "err_naive", "err_ram")],
        out,
    )


def cmd_decide(cfg: RunConfig, q_max: int | None, budget: Budget, out=sys.stdout) -> None:
    cfg.require_sieve(budget.sieve_limit)
    table = build_prime_table(budget.sieve_limit)
    if q_max is not None:
        decisions = decide_range(q_max, budget, table)
    else:
        decisions = [decide(require_odd_prime(cfg.q), budget, table)]
    rows = [d.as_dict() for d in decisions]
    f = Formatter(cfg.precision, cfg.match_paper)
    _emit(
        cfg,
        ["q", "verdict", "path", "x", "y", "bound_lo", "bound_hi", "grh"],
        rows,
        lambda r: [
            str(r["q"]),
            r["verdict"],
            r["path"],
            str(r["x"] or "-"),
            str(r["y"] or "-"),
            f.lo(r["bound_lo"]),
            f.hi(r["bound_hi"]),
            _grh(r["grh"]),
        ],
        out,
    )


def _positive_int(text: str) -> int:
    try:
        v = int(float(text)) if "e" in text.lower() else int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    env_limit = os.environ.get("CYCLOKIT_SIEVE_LIMIT")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--sieve-limit",
        type=_positive_int,
        default=_positive_int(env_limit) if env_limit else DEFAULT_SIEVE_LIMIT,
        help="largest prime sieved (env CYCLOKIT_SIEVE_LIMIT)",
    )
    common.add_argument("--format", dest="output_format", choices=("tsv", "json-lines"), default="tsv")
    common.add_argument("--precision", type=int, default=5, help="printed decimals")
    common.add_argument("--match-paper", action="store_true", help="truncate like the published tables")

    parser = argparse.ArgumentParser(prog="cyclokit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", parents=[common], help="C(q), v(q), alpha(q), e0(q)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--y", type=_positive_int)

    p = sub.add_parser("table1", parents=[common], help="Cyc and Ihara bounds for EK")
    p.add_argument("--q", dest="q_list", help="comma-separated odd primes (default: the published rows)")
    p.add_argument("--x", type=_positive_int, help="Ihara truncation point for every row")

    p = sub.add_parser("table2", parents=[common], help="J sums, B bracket and v(q)")
    p.add_argument("--q", dest="q_list", help="comma-separated odd primes (default: the published rows)")
    p.add_argument("--x", type=_positive_int)
    p.add_argument("--y", type=_positive_int)

    p = sub.add_parser("count", parents=[common], help="exact count against both approximations")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--x", type=_positive_int, required=True)

    p = sub.add_parser("decide", parents=[common], help="naive vs Ramanujan-type verdict")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--q", type=int)
    g.add_argument("--range", dest="q_max", type=int)
    p.add_argument("--x-max", type=_positive_int, default=Budget.x_max)
    p.add_argument("--y-max", type=_positive_int, default=Budget.y_max)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        q=getattr(args, "q", None),
        x=getattr(args, "x", None),
        y=getattr(args, "y", None),
        sieve_limit=args.sieve_limit,
        output_format=args.output_format,
        precision=args.precision,
        match_paper=args.match_paper,
    )
    try:
        if cfg.command == "constants":
            cmd_constants(cfg, out)
        elif cfg.command == "table1":
            cmd_table1(cfg, _q_list(args.q_list, published.TABLE_PRIMES), out)
        elif cfg.command == "table2":
            cmd_table2(cfg, _q_list(args.q_list, published.TABLE_PRIMES), out)
        elif cfg.command == "count":
            cmd_count(cfg, out)
        elif cfg.command == "decide":
            if args.q_max is not None and args.q_max < 3:
                raise DomainError("--range needs q_max >= 3")
            cmd_decide(cfg, args.q_max, Budget(args.x_max, args.y_max), out)
    except DomainError as e:
        print(f"cyclokit: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (RangeError, ResourceError) as e:
        print(f"cyclokit: {e}", file=sys.stderr)
        return EXIT_RANGE
    return 0


if __name__ == "__main__":
    sys.exit(main())

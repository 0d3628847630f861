"""Which approximation to the count is asymptotically better, under GRH.

The naive approximation wins when B_{f_q} < -1/2 and the Ramanujan-type
integral wins when B_{f_q} > -1/2. Each verdict carries the bound values and
truncation points needed to replay it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .bfq import bfq_bracket, bfq_upper_analytic, bfq_upper_hybrid
from .orders import OrderTable, build_order_table
from .primes import PrimeTable, build_prime_table, is_prime, require_odd_prime

THRESHOLD = -0.5
ANALYTIC_FROM = 419
HYBRID_FROM = 23
HYBRID_Y = 1373


class Verdict(str, enum.Enum):
    NAIVE_BETTER = "NaiveBetter"
    RAMANUJAN_BETTER = "RamanujanBetter"
    UNDECIDED = "Undecided"


class Path(str, enum.Enum):
    ANALYTIC = "analytic"
    HYBRID = "hybrid"
    BRACKET = "bracket"


@dataclass(frozen=True)
class Budget:
    x_max: int = 4 * 10**6
    y_max: int = 10**6

    def __post_init__(self):
        if self.x_max < 4 or self.y_max < 3:
            raise ValueError("budget must allow x >= 4 and y >= 3")

    @property
    def sieve_limit(self) -> int:
        return max(self.x_max, self.y_max, HYBRID_Y)


@dataclass(frozen=True)
class Certificate:
    path: Path
    x: int | None
    y: int | None
    bound_lo: float
    bound_hi: float


@dataclass(frozen=True)
class Decision:
    q: int
    verdict: Verdict
    certificate: Certificate
    conditional: bool = True

    def as_dict(self) -> dict:
        c = self.certificate
        return {
            "q": self.q,
            "verdict": self.verdict.value,
            "path": c.path.value,
            "x": c.x,
            "y": c.y,
            "bound_lo": c.bound_lo,
            "bound_hi": c.bound_hi,
            "grh": self.conditional,
        }


def _x_schedule(x_max: int) -> list[int]:
    xs = [10**5, 3 * 10**5, 10**6, 2 * 10**6]
    while xs[-1] < x_max:
        xs.append(2 * xs[-1])
    xs = [x for x in xs if x < x_max] + [x_max]
    return xs


def _y_schedule(y_max: int) -> list[int]:
    ys = [10**5]
    while ys[-1] < y_max:
        ys.append(10 * ys[-1])
    return [y for y in ys if y < y_max] + [y_max]


def search_grid(budget: Budget) -> list[tuple[int, int]]:
    """Escalating (x, y) pairs: x and y advance alternately until both are capped."""
    xs, ys = _x_schedule(budget.x_max), _y_schedule(budget.y_max)
    i = j = 0
    out = [(xs[0], ys[0])]
    turn_x = True
    while i < len(xs) - 1 or j < len(ys) - 1:
        if (turn_x and i < len(xs) - 1) or j == len(ys) - 1:
            i += 1
        else:
            j += 1
        turn_x = not turn_x
        out.append((xs[i], ys[j]))
    return out


def _classify(lo: float, hi: float) -> Verdict:
    if hi < THRESHOLD:
        return Verdict.NAIVE_BETTER
    if lo > THRESHOLD:
        return Verdict.RAMANUJAN_BETTER
    return Verdict.UNDECIDED


def decide(
    q: int,
    budget: Budget = Budget(),
    table: PrimeTable | None = None,
    orders: OrderTable | None = None,
) -> Decision:
    """Staged GRH decision: analytic bound, then hybrid bound, then bracket search."""
    q = require_odd_prime(q)
    if q >= ANALYTIC_FROM:
        ub = bfq_upper_analytic(q, strict=True)
        if ub < THRESHOLD:
            return Decision(q, Verdict.NAIVE_BETTER, Certificate(Path.ANALYTIC, None, None, -math.inf, ub))
    if orders is None:
        if table is None:
            table = build_prime_table(budget.sieve_limit)
        orders = build_order_table(q, table)
    if q >= HYBRID_FROM:
        ub = bfq_upper_hybrid(q, HYBRID_Y, orders, strict=True)
        if ub < THRESHOLD:
            return Decision(q, Verdict.NAIVE_BETTER, Certificate(Path.HYBRID, None, HYBRID_Y, -math.inf, ub))
    last = None
    for x, y in search_grid(budget):
        if x < q:
            continue
        b = bfq_bracket(q, x, y, orders)
        last = Certificate(Path.BRACKET, x, y, b.lo, b.hi)
        verdict = _classify(b.lo, b.hi)
        if verdict is not Verdict.UNDECIDED:
            return Decision(q, verdict, last)
    if last is None:
        last = Certificate(Path.BRACKET, None, None, -math.inf, math.inf)
    return Decision(q, Verdict.UNDECIDED, last)


def replay(decision: Decision, table: PrimeTable | None = None) -> Certificate:
    """Recompute the bound named by a certificate."""
    c, q = decision.certificate, decision.q
    if c.path is Path.ANALYTIC:
        return Certificate(c.path, None, None, -math.inf, bfq_upper_analytic(q, strict=True))
    need = max(v for v in (c.x, c.y) if v is not None)
    if table is None or table.limit < need:
        table = build_prime_table(need)
    orders = build_order_table(q, table)
    if c.path is Path.HYBRID:
        return Certificate(c.path, None, c.y, -math.inf, bfq_upper_hybrid(q, c.y, orders, strict=True))
    b = bfq_bracket(q, c.x, c.y, orders)
    return Certificate(c.path, c.x, c.y, b.lo, b.hi)


def verify(decision: Decision, table: PrimeTable | None = None, tol: float = 1e-12) -> bool:
    """Replay the certificate and check it still implies the verdict."""
    c = decision.certificate
    r = replay(decision, table)
    for a, b in ((c.bound_lo, r.bound_lo), (c.bound_hi, r.bound_hi)):
        if math.isinf(a) or math.isinf(b):
            if a != b:
                return False
        elif abs(a - b) > tol:
            return False
    return _classify(r.bound_lo, r.bound_hi) is decision.verdict


def odd_primes_upto(n: int) -> list[int]:
    return [p for p in range(3, n + 1, 2) if is_prime(p)]


def decide_range(q_max: int, budget: Budget = Budget(), table: PrimeTable | None = None) -> list[Decision]:
    """One Decision per odd prime q <= q_max, sharing one sieve."""
    if q_max < 3:
        raise ValueError("q_max must be >= 3")
    if table is None or table.limit < budget.sieve_limit:
        table = build_prime_table(budget.sieve_limit)
    return [decide(q, budget, table) for q in odd_primes_upto(q_max)]

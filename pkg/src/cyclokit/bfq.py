"""The second-order constant B_{f_q}.

B_{f_q} is the constant term of sum_{n<=x} Lambda_{f_q}(n)/n - tau_q log x with
tau_q = (q-2)/(q-1). Point estimates come from prime sums; certified values
come from EK brackets plus the v(q) sandwich.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bracket import Bracket
from .constants import EULER_GAMMA, PRIME_TAIL_CONSTANT
from .ek import ek_upper_analytic, ihara_bounds
from .errors import DomainError
from .euler_products import _check_orders, v_partial, v_upper_analytic
from .orders import OrderTable
from .primes import PrimeTable, build_prime_table, require_odd_prime


def tau(q: int) -> float:
    return (q - 2) / (q - 1)


def _prime_power(n: int):
    """(p, r) if n = p^r with p prime, else None."""
    if n < 2:
        return None
    d = 2
    while d * d <= n:
        if n % d == 0:
            r = 0
            while n % d == 0:
                n //= d
                r += 1
            return (d, r) if n == 1 else None
        d += 1
    return n, 1


def lambda_fq(n: int, q: int) -> float:
    """Generalised von Mangoldt function of the indicator of q not dividing phi(n)."""
    q = require_odd_prime(q)
    if n < 1:
        raise DomainError("n must be >= 1")
    pp = _prime_power(int(n))
    if pp is None:
        return 0.0
    p, r = pp
    if p == q:
        return (-1) ** (r + 1) * math.log(q)
    if p % q == 1:
        return 0.0
    return math.log(p)


def _constant_part(q: int) -> float:
    return -2 * math.log(q) / (q * q - 1)


def j_fq(q: int, x: int, table: PrimeTable) -> float:
    """-gamma - 2 log q/(q^2-1) - sum_{p<=x, p=1 (q)} log p/(p-1) + log x/(q-1)."""
    q = require_odd_prime(q)
    if x < 3:
        raise DomainError("x must be >= 3")
    table.check(x)
    n = table.count_upto(x)
    p = table.primes[:n]
    sel = p % q == 1
    s = math.fsum(table.logs[:n][sel] / (p[sel] - 1.0))
    return -EULER_GAMMA + _constant_part(q) - s + math.log(x) / (q - 1)


def h_fq(q: int, x: int, orders: OrderTable) -> float:
    """-2 log q/(q^2-1) + sum_{p<=x, p!=1 (q)} log p/(p-1) - tau_q log x.

    The sum includes p = q.
    """
    if x < 3:
        raise DomainError("x must be >= 3")
    q = _check_orders(q, orders, x, "x")
    table = orders.table
    n = table.count_upto(x)
    p = table.primes[:n]
    sel = p % q != 1
    s = math.fsum(table.logs[:n][sel] / (p[sel] - 1.0))
    return _constant_part(q) + s - tau(q) * math.log(x)


def mangoldt_partial_check(q: int, x: int, table: PrimeTable | None = None) -> float:
    """sum_{n<=x} Lambda_{f_q}(n)/n - tau_q log x, summed over prime powers."""
    q = require_odd_prime(q)
    if x < 2:
        return 0.0 if x >= 1 else 0.0
    if x > 10**7:
        raise DomainError("x must be <= 10^7")
    if table is None or table.limit < x:
        table = build_prime_table(x)
    n = table.count_upto(x)
    p, lp = table.primes[:n], table.logs[:n]
    sel = (p % q != 1) & (p != q)
    p, lp = p[sel], lp[sel]
    terms = [lp / p]
    # higher powers only for p <= sqrt(x)
    for pi, li in zip(p[p <= math.isqrt(x)], lp[p <= math.isqrt(x)]):
        pw = int(pi) * int(pi)
        while pw <= x:
            terms.append(np.array([li / pw]))
            pw *= int(pi)
    lq = math.log(q)
    qw, r = q, 1
    while qw <= x:
        terms.append(np.array([(-1) ** (r + 1) * lq / qw]))
        qw *= q
        r += 1
    return math.fsum(np.concatenate(terms)) - tau(q) * math.log(x)


def _b1_constant(q: int) -> float:
    return (3 - q) * math.log(q) / ((q - 1) * (q * q - 1)) - EULER_GAMMA


def bfq_bracket(q: int, x: int, y: int, orders: OrderTable) -> Bracket:
    """GRH bracket [Low_q(x, y), Upp_q(x, y)] for B_{f_q}."""
    if y < 3:
        raise DomainError("y must be >= 3")
    q = _check_orders(q, orders, max(x, y), "max(x, y)")
    ek = ihara_bounds(q, x, orders)
    base = _b1_constant(q)
    v = v_partial(q, y, orders)
    lo = base + ek.lo / (q - 1) + v
    hi = base + ek.hi / (q - 1) + v + PRIME_TAIL_CONSTANT / y
    return Bracket(lo, hi, int(x), True, f"Low/Upp at x={x}, y={y}")


def bfq_upper_analytic(q: int, strict: bool = False) -> float:
    """Closed-form GRH upper bound for B_{f_q}, q >= 67.

    The default is -gamma + 2 log(q log q)/q + the v(q) bound. ``strict``
    divides the EK bound by q-1 instead of q and keeps the negative constant,
    which is what a sound certificate needs.
    """
    q = require_odd_prime(q)
    if q < 67:
        raise DomainError("analytic B bound needs q >= 67")
    if strict:
        return _b1_constant(q) + ek_upper_analytic(q) / (q - 1) + v_upper_analytic(q)
    return -EULER_GAMMA + 2 * math.log(q * math.log(q)) / q + v_upper_analytic(q)


def bfq_upper_hybrid(q: int, y: int, orders: OrderTable, strict: bool = False) -> float:
    """Upper bound from the analytic EK bound plus an explicit v(q) sum to y.

    Default: -gamma + 2 log(q log q)/q + sum_{p<y} + 1.055/y. ``strict`` uses
    the EK bound over q-1, the negative constant, and includes p = y.
    """
    q = require_odd_prime(q)
    if q < 23:
        raise DomainError("hybrid B bound needs q >= 23")
    if y < 3:
        raise DomainError("y must be >= 3")
    q = _check_orders(q, orders, y, "y")
    tail = PRIME_TAIL_CONSTANT / y
    if strict:
        return _b1_constant(q) + ek_upper_analytic(q) / (q - 1) + v_partial(q, y, orders) + tail
    v = v_partial(q, y - 1, orders) if y in orders.table else v_partial(q, y, orders)
    return -EULER_GAMMA + 2 * math.log(q * math.log(q)) / q + v + tail


def e1_over_e0(q: int, b: float) -> float:
    return (1 + b) / (q - 1)


@dataclass(frozen=True)
class BfqEstimate:
    q: int
    j_value: float
    h_value: float
    bracket: Bracket
    x: int
    y: int


def estimate_bfq(q: int, x: int, y: int, orders: OrderTable) -> BfqEstimate:
    """J and H at the table's full range, with the certified bracket at (x, y)."""
    top = orders.limit
    return BfqEstimate(
        q,
        j_fq(q, top, orders.table),
        h_fq(q, top, orders),
        bfq_bracket(q, x, y, orders),
        int(x),
        int(y),
    )

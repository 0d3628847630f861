"""Certified evaluation of C(q), v(q) and Mertens-type products.

Every product is evaluated as exp of a correctly rounded sum of logarithms.
"""

from __future__ import annotations

import math

import numpy as np

from .bracket import Bracket
from .constants import PRIME_TAIL_CONSTANT
from .errors import DomainError, RangeError
from .orders import OrderTable, prime_factors
from .primes import PrimeTable, build_prime_table, require_odd_prime


def _check_orders(q: int, orders: OrderTable, point: float, name: str) -> int:
    q = require_odd_prime(q)
    if orders.q != q:
        raise DomainError(f"order table is for q={orders.q}, not q={q}")
    if point > orders.limit:
        raise RangeError(f"{name}={point} exceeds order table limit {orders.limit}")
    return q


def inverse_power_terms(logs: np.ndarray, f: np.ndarray) -> np.ndarray:
    """1/(p^f - 1) computed as t/(1-t) with t = p^-f; no overflow for large f."""
    e = f * logs
    return np.exp(-e) / -np.expm1(-e)


def log_c_partial(q: int, y: float, orders: OrderTable) -> float:
    _, lp, f = orders.upto(y)
    sel = f >= 2
    lp, f = lp[sel], f[sel]
    terms = ((q - 1) / f) * np.log1p(-np.exp(-f * lp))
    return math.fsum(terms)


def c_constant(q: int, y: int, orders: OrderTable) -> Bracket:
    """Bracket for C(q) = prod_{p != q, f_p >= 2} (1 - p^-f_p)^((q-1)/f_p).

    The factors beyond y multiply to at least exp(-(q-1)/(y-1)).
    """
    q = _check_orders(q, orders, y, "y")
    if y < 3:
        raise DomainError("y must be >= 3")
    partial = math.exp(log_c_partial(q, y, orders))
    lo = partial * math.exp(-(q - 1) / (y - 1))
    return Bracket(lo, partial, int(y), False, "partial product, tail (q-1)/(y-1)")


def primitive_root(q: int) -> int:
    q = require_odd_prime(q)
    factors = prime_factors(q - 1)
    for g in range(2, q):
        if all(pow(g, (q - 1) // r, q) != 1 for r in factors):
            return g
    return 1  # q = 3 handled above; only reached for q = 2


def is_primitive_root(g: int, q: int) -> bool:
    if g % q == 0:
        return False
    return all(pow(g, (q - 1) // r, q) != 1 for r in prime_factors(q - 1))


def discrete_log_table(g: int, q: int) -> np.ndarray:
    """ind[a] = k with g^k = a (mod q), 0 <= k < q-1; ind[0] = -1."""
    ind = np.full(q, -1, dtype=np.int64)
    a = 1
    for k in range(q - 1):
        ind[a] = k
        a = a * g % q
    return ind


def c_constant_sw(q: int, g: int, y: int, table: PrimeTable | None = None) -> float:
    """Partial Spearman-Williams double product over r = 1..q-2 and p <= y.

    Primes are grouped by the character value chi_g(p) = omega^r; the class of
    r contributes (1 - p^-(q-1)/(r,q-1))^(r,q-1).
    """
    q = require_odd_prime(q)
    if not is_primitive_root(g, q):
        raise DomainError(f"{g} is not a primitive root mod {q}")
    if y < 3:
        raise DomainError("y must be >= 3")
    if table is None:
        table = build_prime_table(y)
    table.check(y, "y")
    n = table.count_upto(y)
    p, lp = table.primes[:n], table.logs[:n]
    keep = p != q
    p, lp = p[keep], lp[keep]
    ind = discrete_log_table(g, q)[p % q]
    total = []
    for r in range(1, q - 1):
        sel = ind == r
        if not sel.any():
            continue
        d = math.gcd(r, q - 1)
        expo = (q - 1) // d
        total.append(d * np.log1p(-np.exp(-expo * lp[sel])))
    if not total:
        return 1.0
    return math.exp(math.fsum(np.concatenate(total)))


def v_partial(q: int, y: float, orders: OrderTable) -> float:
    """Sum over p <= y, p != q, p != 1 mod q of log p / (p^f_p - 1)."""
    _, lp, f = orders.upto(y)
    sel = f >= 2
    return math.fsum(lp[sel] * inverse_power_terms(lp[sel], f[sel]))


def v_bracket(q: int, y: int, orders: OrderTable) -> Bracket:
    q = _check_orders(q, orders, y, "y")
    if y < 3:
        raise DomainError("y must be >= 3")
    lo = v_partial(q, y, orders)
    return Bracket(lo, lo + PRIME_TAIL_CONSTANT / y, int(y), False, "partial sum + 1.055/y")


def v_upper_analytic(q: int) -> float:
    """Upper bound 2 log(9 log q) log q / (3q), valid for q >= 67."""
    q = require_odd_prime(q)
    if q < 67:
        raise DomainError("analytic v(q) bound needs q >= 67")
    lq = math.log(q)
    return 2 * math.log(9 * lq) * lq / (3 * q)


def mertens_progression_product(q: int, x: float, table: PrimeTable) -> float:
    """prod_{p <= x, p = 1 mod q} (1 - 1/p)."""
    q = require_odd_prime(q)
    table.check(x)
    n = table.count_upto(x)
    p = table.primes[:n]
    p = p[p % q == 1].astype(np.float64)
    return math.exp(math.fsum(np.log1p(-1.0 / p)))


def ideal_mertens_product(q: int, x: float, orders: OrderTable) -> float:
    """Product of (1 - 1/N(P)) over prime ideals P of Q(zeta_q) with N(P) <= x."""
    q = _check_orders(q, orders, x, "x")
    if x < q:
        raise DomainError("x must be >= q")
    p, lp, f = orders.upto(x)
    # cheap log-space filter, then the exact integer test p^f <= x
    cand = np.flatnonzero(f * lp <= math.log(x) + 1e-9)
    exact = [i for i in cand if int(p[i]) ** int(f[i]) <= x]
    fs, ls = f[exact], lp[exact]
    terms = [math.log1p(-1.0 / q)]
    terms.extend(((q - 1) / fs) * np.log1p(-np.exp(-fs * ls)))
    return math.exp(math.fsum(terms))

"""Euler-Kronecker constant of Q(zeta_q): heuristic estimate and GRH brackets."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bracket import Bracket
from .constants import EULER_GAMMA, LOG_2PI
from .errors import DomainError
from .euler_products import _check_orders, inverse_power_terms
from .orders import OrderTable
from .primes import require_odd_prime


def cyc(q: int, x: int, orders: OrderTable) -> float:
    """log x - (q-1) sum_{p<=x, p!=q} log p/(p^f_p - 1) - log q/(q-1).

    Tends to EK as x grows, with no explicit error term.
    """
    if x < 3:
        raise DomainError("x must be >= 3")
    q = _check_orders(q, orders, x, "x")
    if x < q:
        raise DomainError("x must be >= q")
    _, lp, f = orders.upto(x)
    s = math.fsum(lp * inverse_power_terms(lp, f))
    return math.log(x) - (q - 1) * s - math.log(q) / (q - 1)


def phi_k(q: int, x: float, orders: OrderTable) -> float:
    """Weighted prime-ideal-power sum Phi_K(x) entering Ihara's bounds."""
    if x <= 1:
        raise DomainError("x must be > 1")
    q = _check_orders(q, orders, x, "x")
    p, lp, f = orders.upto(x)
    terms = []
    # split primes (f = 1) with k = 1: the bulk of the sum, vectorised
    split = f == 1
    terms.append((q - 1) * (x / p[split] - 1.0) * lp[split])
    # every remaining norm p^(f k) <= x has p^(f k) >= p^2, so p <= sqrt(x)
    small = np.flatnonzero(p <= math.isqrt(int(x)))
    rest = []
    for i in small:
        pi, fi, li = int(p[i]), int(f[i]), float(lp[i])
        if fi * li > math.log(x) + 1e-9:
            continue
        base = pi**fi
        n = base * base if fi == 1 else base
        while n <= x:
            rest.append((q - 1) * (x / n - 1.0) * li)
            n *= base
    n = q
    lq = math.log(q)
    while n <= x:
        rest.append((x / n - 1.0) * lq)
        n *= q
    return math.fsum(np.concatenate([terms[0], np.array(rest)])) / (x - 1)


def kappa2(q: int) -> float:
    """2 kappa_q = (q-2) log q - (q-1)(gamma + log 2 pi)."""
    return (q - 2) * math.log(q) - (q - 1) * (EULER_GAMMA + LOG_2PI)


def l_term(q: int, x: float) -> float:
    return (q - 1) / 2 * (math.log(x / (x - 1)) + math.log(x) / (x - 1))


def ihara_bounds(q: int, x: int, orders: OrderTable) -> Bracket:
    """GRH-conditional bracket [low_q(x), upp_q(x)] for EK of Q(zeta_q)."""
    if x < 4:
        raise DomainError("x must be >= 4")
    q = require_odd_prime(q)
    core = math.log(x) - phi_k(q, x, orders) + l_term(q, x)
    s = math.sqrt(x)
    k2 = kappa2(q)
    lo = (s - 1) / (s + 1) * core - k2 / (s + 1) - 1
    hi = (s + 1) / (s - 1) * core + k2 / (s - 1) - 1
    return Bracket(lo, hi, int(x), True, "Ihara low/upp")


def ek_upper_analytic(q: int) -> float:
    """GRH upper bound for EK valid for q >= 23: the smaller of two Ihara forms."""
    q = require_odd_prime(q)
    if q < 23:
        raise DomainError("analytic EK bound needs q >= 23")
    z = (q - 2) / 2 * math.log(q)
    return min(2 * math.log(q * math.log(q)), (z + 1) / (z - 1) * (2 * math.log(z) + 1))


@dataclass(frozen=True)
class EkEstimate:
    q: int
    x: int
    cyc: float
    bracket: Bracket


def estimate_ek(q: int, x: int, orders: OrderTable) -> EkEstimate:
    return EkEstimate(q, int(x), cyc(q, x, orders), ihara_bounds(q, x, orders))

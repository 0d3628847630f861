"""Exact counts of n <= x with q not dividing phi(n), and their asymptotics."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .characters import alpha_product
from .errors import DomainError, ResourceError
from .primes import PrimeTable, build_prime_table, require_odd_prime

MAX_COUNT_X = 10**8
MAX_PHI_X = 10**7


def count_exact(q: int, x: int, table: PrimeTable | None = None, max_x: int = MAX_COUNT_X) -> int:
    """Number of n <= x with q not dividing phi(n).

    Such n are exactly those with no prime factor p = 1 (mod q) and with
    q^2 not dividing n, so one boolean sieve strikes out the rest.
    """
    q = require_odd_prime(q)
    x = int(x)
    if x < 1:
        raise DomainError("x must be >= 1")
    if x > max_x:
        raise ResourceError(f"x={x} exceeds counting budget {max_x}")
    keep = np.ones(x + 1, dtype=bool)
    keep[0] = False
    keep[q * q :: q * q] = False
    if x >= 2 * q + 1:
        if table is None or table.limit < x:
            table = build_prime_table(x)
        p = table.primes[: table.count_upto(x)]
        for r in p[p % q == 1]:
            keep[int(r) :: int(r)] = False
    return int(np.count_nonzero(keep))


def phi_sieve_oracle(x: int) -> np.ndarray:
    """phi(n) for n = 1..x (index 0 holds phi(1)), by the multiplicative sieve."""
    x = int(x)
    if x > MAX_PHI_X:
        raise ResourceError(f"x={x} exceeds totient sieve budget {MAX_PHI_X}")
    if x < 1:
        return np.zeros(0, dtype=np.int64)
    phi = np.arange(x + 1, dtype=np.int64)
    for p in range(2, x + 1):
        if phi[p] == p:  # untouched, so prime
            phi[p::p] -= phi[p::p] // p
    return phi[1:]


def alpha_q(q: int) -> float:
    """Residue at s=1 of the Dedekind zeta function of Q(zeta_q)."""
    q = require_odd_prime(q)
    if q > 200:
        raise DomainError("alpha_q is evaluated for q <= 200 only")
    val = alpha_product(q)
    if abs(val.imag) > 1e-10:
        raise ArithmeticError(f"character product not real: {val}")
    return val.real


def gamma_fn(t: float) -> float:
    if t <= 0:
        raise DomainError("gamma_fn needs t > 0")
    return math.gamma(t)


def e0(q: int, c: float, a: float) -> float:
    """Leading coefficient of the count: (1 - q^-2) / (Gamma((q-2)/(q-1)) (c (1-1/q) a)^(1/(q-1)))."""
    q = require_odd_prime(q)
    if c <= 0 or a <= 0:
        raise DomainError("C(q) and alpha(q) must be positive")
    return (1 - q**-2) / (gamma_fn((q - 2) / (q - 1)) * (c * (1 - 1 / q) * a) ** (1 / (q - 1)))


def naive_approx(q: int, x: float, e0_val: float) -> float:
    if x < 2:
        raise DomainError("x must be >= 2")
    return e0_val * x / math.log(x) ** (1 / (q - 1))


def log_power_integral(delta: float, x: float, rtol: float = 1e-10) -> float:
    """int_2^x dt / log(t)^delta, integrated in u = log t over log-spaced panels."""
    if x < 2:
        raise DomainError("x must be >= 2")
    a, b = math.log(2.0), math.log(x)
    if b == a:
        return 0.0
    # e^u grows fast; panels of unit length in u keep each integrand tame
    edges = np.append(np.arange(a, b, 1.0), b)
    parts = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        val, _ = integrate.quad(
            lambda u: math.exp(u - delta * math.log(u)), lo, hi, epsabs=0.0, epsrel=rtol
        )
        parts.append(val)
    return math.fsum(parts)


def ramanujan_approx(q: int, x: float, e0_val: float) -> float:
    return e0_val * log_power_integral(1 / (q - 1), x)


@dataclass(frozen=True)
class ApproxReport:
    q: int
    x: int
    exact: int
    naive: float
    ramanujan: float
    err_naive: float
    err_ram: float

    @property
    def ramanujan_better(self) -> bool:
        return self.err_ram < self.err_naive


def approx_report(q: int, x: int, e0_val: float, table: PrimeTable | None = None) -> ApproxReport:
    exact = count_exact(q, x, table)
    nv = naive_approx(q, x, e0_val)
    rv = ramanujan_approx(q, x, e0_val)
    return ApproxReport(q, int(x), exact, nv, rv, abs(nv - exact), abs(rv - exact))

"""Multiplicative orders f_p of primes p modulo a fixed odd prime q."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .primes import PrimeTable, is_prime, require_odd_prime


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _order_of_residue(a: int, q: int, factors: list[int]) -> int:
    k = q - 1
    for r in factors:
        while k % r == 0 and pow(a, k // r, q) == 1:
            k //= r
    return k


def multiplicative_order(p: int, q: int) -> int:
    """Smallest k >= 1 with p^k = 1 (mod q), for primes p != q."""
    q = require_odd_prime(q)
    if not is_prime(p):
        raise DomainError(f"p must be prime, got {p}")
    if p == q:
        raise DomainError("p must differ from q")
    return _order_of_residue(p % q, q, prime_factors(q - 1))


def orders_by_residue(q: int) -> np.ndarray:
    """Array ``o`` with o[a] = order of a mod q for 1 <= a < q; o[0] = 0."""
    factors = prime_factors(q - 1)
    out = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        out[a] = _order_of_residue(a, q, factors)
    return out


@dataclass(frozen=True)
class OrderTable:
    """f_p for every prime p <= limit, stored parallel to ``table.primes``.

    The entry at p = q is 0 (q ramifies; it has no order).
    """

    q: int
    table: PrimeTable = field(repr=False)
    orders: np.ndarray = field(repr=False)

    @property
    def limit(self) -> int:
        return self.table.limit

    def __getitem__(self, p: int) -> int:
        i = int(np.searchsorted(self.table.primes, p))
        if i >= len(self.table.primes) or self.table.primes[i] != p or p == self.q:
            raise KeyError(p)
        return int(self.orders[i])

    def as_dict(self) -> dict[int, int]:
        return {
            int(p): int(f)
            for p, f in zip(self.table.primes, self.orders)
            if p != self.q
        }

    def upto(self, x: float):
        """(primes, logs, orders) for p <= x with p != q."""
        n = self.table.count_upto(x)
        p = self.table.primes[:n]
        keep = p != self.q
        return p[keep], self.table.logs[:n][keep], self.orders[:n][keep]


def build_order_table(q: int, table: PrimeTable) -> OrderTable:
    q = require_odd_prime(q)
    # f_p depends only on p mod q, so q - 1 modular computations cover the table.
    if q <= 4 * len(table.primes) + 64:
        by_res = orders_by_residue(q)
        orders = by_res[table.primes % q]
    else:
        factors = prime_factors(q - 1)
        res = table.primes % q
        uniq, inv = np.unique(res, return_inverse=True)
        vals = np.array(
            [_order_of_residue(int(a), q, factors) if a else 0 for a in uniq],
            dtype=np.int64,
        )
        orders = vals[inv]
    orders = np.asarray(orders, dtype=np.int64)
    orders.setflags(write=False)
    return OrderTable(q, table, orders)

"""Segmented prime sieve and deterministic prime sums."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, RangeError, ResourceError

MAX_SIEVE_LIMIT = 10**9
# Odd numbers per segment; one byte each, so ~256 KiB of sieve state.
SEGMENT_ODDS = 1 << 18

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for all n < 3.3e24."""
    n = int(n)
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def require_odd_prime(q) -> int:
    if isinstance(q, bool) or not isinstance(q, (int, np.integer)):
        raise DomainError(f"q must be an odd prime, got {q!r}")
    q = int(q)
    if q == 2 or not is_prime(q):
        raise DomainError(f"q must be an odd prime, got {q}")
    return q


def _small_sieve(n: int) -> np.ndarray:
    flags = np.ones(n + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags)


def sieve_primes(limit: int, segment_odds: int = SEGMENT_ODDS) -> np.ndarray:
    """All primes <= limit as an int64 array, via an odd-only segmented sieve."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    root = math.isqrt(limit)
    base = _small_sieve(max(root, 2))
    odd_base = base[base > 2]
    chunks = [np.array([2], dtype=np.int64)]
    span = 2 * segment_odds
    low = 3
    while low <= limit:
        high = min(low + span, limit + 1)  # exclusive
        mask = np.ones((high - low + 1) // 2, dtype=bool)
        for p in odd_base:
            p = int(p)
            p2 = p * p
            if p2 >= high:
                break
            start = max(p2, -(-low // p) * p)
            if start % 2 == 0:
                start += p
            mask[(start - low) // 2 :: p] = False
        chunks.append(low + 2 * np.flatnonzero(mask).astype(np.int64))
        low = high if high % 2 else high + 1
    return np.concatenate(chunks)


@dataclass(frozen=True)
class PrimeTable:
    """All primes up to ``limit`` with their logarithms.

    Arrays are read-only; tables can be shared freely.
    """

    limit: int
    primes: np.ndarray = field(repr=False)
    logs: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.primes)

    def count_upto(self, x: float) -> int:
        """pi(x) as a slice length into ``primes``."""
        return int(np.searchsorted(self.primes, math.floor(x), side="right"))

    def check(self, x: float, what: str = "x") -> None:
        if x > self.limit:
            raise RangeError(f"{what}={x} exceeds sieve limit {self.limit}")

    def __contains__(self, n) -> bool:
        i = np.searchsorted(self.primes, n)
        return bool(i < len(self.primes) and self.primes[i] == n)


def build_prime_table(limit: int, max_limit: int = MAX_SIEVE_LIMIT) -> PrimeTable:
    limit = int(limit)
    if limit < 2:
        raise DomainError(f"sieve limit must be >= 2, got {limit}")
    if limit > max_limit:
        raise ResourceError(f"sieve limit {limit} exceeds budget {max_limit}")
    primes = sieve_primes(limit)
    logs = np.log(primes.astype(np.float64))
    primes.setflags(write=False)
    logs.setflags(write=False)
    return PrimeTable(limit, primes, logs)


def theta(table: PrimeTable, x: float) -> float:
    """Chebyshev's sum of log p over p <= x, correctly rounded."""
    table.check(x)
    n = table.count_upto(x)
    return math.fsum(table.logs[:n])

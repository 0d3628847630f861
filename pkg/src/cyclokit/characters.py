"""Dirichlet characters mod a prime q and their values L(1, chi)."""

from __future__ import annotations

import cmath
import math

import numpy as np

from .euler_products import discrete_log_table, primitive_root
from .primes import require_odd_prime


def character_values(q: int, k: int, g: int | None = None) -> np.ndarray:
    """chi_g^k(a) for a = 0..q-1 as a complex array, chi(0) = 0."""
    q = require_odd_prime(q)
    if g is None:
        g = primitive_root(q)
    ind = discrete_log_table(g, q)
    out = np.zeros(q, dtype=np.complex128)
    # reduce the exponent mod q-1 before scaling to keep the angle small
    out[1:] = np.exp(2j * np.pi * ((k * ind[1:]) % (q - 1)) / (q - 1))
    return out


def is_odd(chi: np.ndarray) -> bool:
    return abs(chi[-1] + 1) < 1e-9  # chi(-1) = -1


def gauss_sum(chi: np.ndarray) -> complex:
    q = len(chi)
    a = np.arange(q)
    return complex(np.sum(chi * np.exp(2j * np.pi * a / q)))


def l_one(chi: np.ndarray) -> complex:
    """L(1, chi) for a nontrivial character chi modulo a prime.

    Odd chi:  (pi i tau(chi) / q^2) * sum_a conj(chi(a)) a
    Even chi: -(tau(chi) / q) * sum_a conj(chi(a)) log(2 sin(pi a / q))
    """
    q = len(chi)
    tau = gauss_sum(chi)
    a = np.arange(1, q)
    cbar = np.conj(chi[1:])
    if is_odd(chi):
        return 1j * math.pi * tau / q**2 * complex(np.sum(cbar * a))
    return -tau / q * complex(np.sum(cbar * np.log(2 * np.sin(np.pi * a / q))))


def alpha_product(q: int, g: int | None = None) -> complex:
    """prod over the q-2 nontrivial characters of L(1, chi), as complex.

    Accumulated as a sum of complex logs to keep the magnitude in range.
    """
    q = require_odd_prime(q)
    if g is None:
        g = primitive_root(q)
    log_mag = []
    arg = 0.0
    for k in range(1, q - 1):
        val = l_one(character_values(q, k, g))
        log_mag.append(math.log(abs(val)))
        arg += cmath.phase(val)
    return cmath.rect(math.exp(math.fsum(log_mag)), arg)

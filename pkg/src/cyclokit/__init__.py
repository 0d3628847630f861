"""Certified constants for the count of n <= x with q not dividing phi(n)."""

from .asymptotics import (
    ApproxReport,
    alpha_q,
    approx_report,
    count_exact,
    e0,
    gamma_fn,
    naive_approx,
    phi_sieve_oracle,
    ramanujan_approx,
)
from .bfq import (
    BfqEstimate,
    bfq_bracket,
    bfq_upper_analytic,
    bfq_upper_hybrid,
    e1_over_e0,
    estimate_bfq,
    h_fq,
    j_fq,
    lambda_fq,
    mangoldt_partial_check,
)
from .bracket import Bracket
from .decide import Budget, Decision, Verdict, decide, decide_range
from .ek import EkEstimate, cyc, ek_upper_analytic, estimate_ek, ihara_bounds, phi_k
from .errors import DomainError, RangeError, ResourceError
from .euler_products import (
    c_constant,
    c_constant_sw,
    ideal_mertens_product,
    mertens_progression_product,
    v_bracket,
    v_upper_analytic,
)
from .orders import OrderTable, build_order_table, multiplicative_order
from .primes import PrimeTable, build_prime_table, is_prime, theta

__version__ = "0.1.0"

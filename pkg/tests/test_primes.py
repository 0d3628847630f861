import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cyclokit import DomainError, RangeError, ResourceError, build_prime_table, is_prime, theta
from cyclokit.primes import _small_sieve, sieve_primes


def trial_division(n):
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def test_limit_10():
    assert build_prime_table(10).primes.tolist() == [2, 3, 5, 7]


def test_limit_100_against_trial_division():
    expected = [n for n in range(101) if trial_division(n)]
    assert len(expected) == 25
    assert build_prime_table(100).primes.tolist() == expected


def test_limit_1e6_against_plain_sieve(table_1e6):
    flags = bytearray([1]) * (10**6 + 1)
    flags[0] = flags[1] = 0
    for p in range(2, 1001):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, 10**6 + 1, p)))
    oracle = [i for i, f in enumerate(flags) if f]
    assert len(oracle) == 78498
    assert table_1e6.primes.tolist() == oracle


@pytest.mark.parametrize("limit", [2, 3, 4, 9, 25, 524289, 1048577, 1048578])
def test_segment_boundaries(limit):
    got = sieve_primes(limit, segment_odds=64)
    assert np.array_equal(got, _small_sieve(limit) if limit > 2 else [2])
    assert np.array_equal(got, sieve_primes(limit))


@given(st.integers(min_value=2, max_value=3000))
def test_small_segments_match_trial_division(limit):
    got = sieve_primes(limit, segment_odds=8).tolist()
    assert got == [n for n in range(limit + 1) if trial_division(n)]


def test_errors():
    with pytest.raises(DomainError):
        build_prime_table(1)
    with pytest.raises(ResourceError):
        build_prime_table(10**9 + 1)
    with pytest.raises(ResourceError):
        build_prime_table(1000, max_limit=999)
    with pytest.raises(RangeError):
        theta(build_prime_table(10), 11)


@given(st.integers(min_value=0, max_value=10**5))
def test_miller_rabin_matches_trial_division(n):
    assert is_prime(n) == trial_division(n)


def test_miller_rabin_large():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7


def test_theta_examples(table_1e6):
    assert theta(table_1e6, 10) == pytest.approx(math.log(210), abs=1e-12)
    assert theta(table_1e6, 10) == pytest.approx(5.34710753, abs=1e-8)
    assert theta(table_1e6, 1) == 0.0
    assert 0.98 * 7481 <= theta(table_1e6, 7481) <= 1.017 * 7481


@settings(max_examples=200)
@given(st.integers(min_value=7481, max_value=10**6))
def test_theta_rosser_schoenfeld(table_1e6, x):
    t = theta(table_1e6, x)
    assert 0.98 * x <= t <= 1.017 * x


@settings(max_examples=200)
@given(st.floats(min_value=1.0, max_value=1e6))
def test_theta_universal_bound(table_1e6, x):
    assert theta(table_1e6, x) < 1.0012 * x


def test_deterministic():
    a, b = build_prime_table(10**6), build_prime_table(10**6)
    assert np.array_equal(a.primes, b.primes)
    assert a.logs.tobytes() == b.logs.tobytes()
    assert theta(a, 999_983).hex() == theta(b, 999_983).hex()


def test_table_is_read_only(table_1e6):
    with pytest.raises(ValueError):
        table_1e6.primes[0] = 4

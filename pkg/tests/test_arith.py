"""Tests for the integer arithmetic layer.

The factorization oracle here is plain bounded trial division, written
before the fast implementation and kept independent of it.
"""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exptriple.arith import (
    Factored,
    as_power_of,
    factorize,
    introot,
    is_prime,
    least_index,
    lte_odd,
    power_representations,
    prime_set,
    prime_support_subset,
    radical,
    same_prime_set_scan,
    two_adic,
    two_adic_profile,
    valuation,
)


def oracle_factorize(n: int) -> list[tuple[int, int]]:
    # Unbounded trial division: too slow for real work, perfect as a check.
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def oracle_is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


class TestFactorize:
    def test_small_values(self):
        for n in range(1, 2000):
            assert factorize(n).factors == tuple(oracle_factorize(n))

    def test_known_values(self):
        assert factorize(1).factors == ()
        assert factorize(360).factors == ((2, 3), (3, 2), (5, 1))
        assert factorize(78405).factors == ((3, 1), (5, 1), (5227, 1))
        assert factorize(24304930).factors == ((2, 1), (5, 1), (13, 1), (31, 1), (37, 1), (163, 1))
        assert factorize(7857).factors == ((3, 4), (97, 1))

    def test_large_semiprime(self):
        p, q = 1000003, 1000033
        assert factorize(p * q).factors == ((p, 1), (q, 1))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            factorize(0)
        with pytest.raises(ValueError):
            factorize(-12)

    def test_exponent_of(self):
        f = factorize(360)
        assert f.exponent_of(2) == 3
        assert f.exponent_of(7) == 0

    @given(st.integers(min_value=1, max_value=10**12))
    @settings(max_examples=200)
    def test_recomposition(self, n):
        f = factorize(n)
        assert math.prod(p**e for p, e in f.factors) == n
        assert all(e >= 1 for _, e in f.factors)
        assert list(f.primes) == sorted(f.primes)
        assert all(is_prime(p) for p in f.primes)


class TestIsPrime:
    def test_agrees_with_oracle(self):
        for n in range(0, 5000):
            assert is_prime(n) == oracle_is_prime(n)

    def test_witness_values(self):
        assert is_prime(5227)
        assert is_prime(4931)
        assert is_prime(2**61 - 1)
        assert not is_prime(2**67 - 1)
        # strong pseudoprime to base 2, composite
        assert not is_prime(3215031751)


class TestDerivedFunctions:
    def test_prime_set(self):
        assert prime_set(1) == frozenset()
        assert prime_set(12) == frozenset({2, 3})
        assert prime_set(78405) == frozenset({3, 5, 5227})

    def test_radical(self):
        assert radical(1) == 1
        assert radical(8) == 2
        assert radical(360) == 30

    def test_valuation(self):
        assert valuation(2, 40) == 3
        assert valuation(5, 40) == 1
        assert valuation(7, 40) == 0
        assert valuation(3, -27) == 3
        with pytest.raises(ValueError):
            valuation(4, 12)
        with pytest.raises(ValueError):
            valuation(2, 0)

    def test_two_adic(self):
        assert two_adic(40) == 3
        assert two_adic(7) == 0
        assert two_adic(-16) == 4

    @given(st.integers(min_value=1, max_value=10**9))
    @settings(max_examples=200)
    def test_two_adic_matches_valuation(self, n):
        assert two_adic(n) == valuation(2, n)


class TestPowers:
    def test_as_power_of(self):
        assert as_power_of(2, 8) == 3
        assert as_power_of(3, 3) == 1
        assert as_power_of(2, 12) is None
        assert as_power_of(10, 1) is None
        assert as_power_of(6, 216) == 3
        with pytest.raises(ValueError):
            as_power_of(1, 8)

    def test_introot(self):
        assert introot(0, 5) == 0
        assert introot(1, 3) == 1
        assert introot(26, 3) == 2
        assert introot(27, 3) == 3
        assert introot(28, 3) == 3
        assert introot(10**18, 2) == 10**9
        assert introot(2**300 - 1, 3) == 2**100 - 1

    @given(st.integers(min_value=0, max_value=10**30), st.integers(min_value=1, max_value=40))
    @settings(max_examples=300)
    def test_introot_is_floor(self, n, k):
        r = introot(n, k)
        assert r**k <= n < (r + 1) ** k

    def test_power_representations(self):
        assert power_representations(1) == [(1, 1)]
        assert power_representations(7) == [(7, 1)]
        assert power_representations(64) == [(64, 1), (8, 2), (4, 3), (2, 6)]
        assert power_representations(64, max_exp=3) == [(64, 1), (8, 2), (4, 3)]
        assert power_representations(729) == [(729, 1), (27, 2), (9, 3), (3, 6)]

    @given(st.integers(min_value=2, max_value=50), st.integers(min_value=1, max_value=12))
    @settings(max_examples=200)
    def test_power_representations_complete(self, b, e):
        n = b**e
        reps = power_representations(n)
        assert all(base**exp == n for base, exp in reps)
        assert (n, 1) in reps
        assert (b, e) in reps


class TestLeastIndex:
    def test_frozen_examples(self):
        # oracle: brute scan of R^t -/+ S^t mod M by hand for tiny cases
        assert least_index(2, 1, 7, 0) == 3  # 2^3 - 1 = 7
        assert least_index(3, 1, 8, 0) == 2  # 3^2 - 1 = 8
        assert least_index(2, 1, 3, 1) == 1  # 2 + 1 = 3
        assert least_index(19, 3, 2, 0) == 1  # 19 - 3 = 16
        assert least_index(19, 3, 16, 0) == 1
        assert least_index(19, 3, 32, 0) == 2  # 19^2 - 3^2 = 352 = 2^5 * 11
        assert least_index(5, 2, 7, 1) == 1  # 5 + 2 = 7
        assert least_index(5, 2, 7, 0) == 2  # 25 - 4 = 21

    def test_modulus_one(self):
        assert least_index(5, 2, 1, 0) == 1

    def test_cap_exhaustion(self):
        # 6^t - 1 mod 4 is 1 then 3, 3, ... so no index exists at all
        assert least_index(6, 1, 4, 0, cap=100) is None
        # the true index is 256 (the order of 3 mod 2^10), beyond this cap
        assert least_index(3, 1, 1024, 0, cap=100) is None
        assert least_index(3, 1, 1024, 0) == 256

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            least_index(2, 2, 5, 0)
        with pytest.raises(ValueError):
            least_index(6, 3, 5, 0)
        with pytest.raises(ValueError):
            least_index(3, 1, 0, 0)
        with pytest.raises(ValueError):
            least_index(3, 1, 5, 2)
        with pytest.raises(ValueError):
            least_index(3, 1, 5, 0, cap=0)

    @given(
        st.integers(min_value=1, max_value=30),
        st.integers(min_value=1, max_value=30),
        st.integers(min_value=2, max_value=200),
        st.integers(min_value=0, max_value=1),
    )
    @settings(max_examples=300)
    def test_hit_structure(self, s, delta, m, eps):
        # hits are exactly the multiples of the least index (minus case) or
        # exactly its odd multiples (plus case)
        r = s + delta
        if math.gcd(r, s) != 1:
            return
        t0 = least_index(r, s, m, eps, cap=500)
        if t0 is None:
            return
        sign = 1 if eps == 0 else -1
        for t in range(1, 6 * t0 + 1):
            hit = (pow(r, t, m) - sign * pow(s, t, m)) % m == 0
            if eps == 0:
                assert hit == (t % t0 == 0)
            elif m > 2:
                assert hit == (t % t0 == 0 and (t // t0) % 2 == 1)
            else:
                # mod 2 the signs coincide, so every index past the first hits
                assert hit


class TestLteOdd:
    def test_frozen_examples(self):
        # 10 - 1 = 9 = 3^2, 10^3 - 1 = 999 = 3^3 * 37
        assert lte_odd(10, 1, 3, 1, 3) == (2, 3, True)
        # 4 - 1 = 3, 4^3 - 1 = 63 = 3^2 * 7
        assert lte_odd(4, 1, 3, 1, 3) == (1, 2, True)
        # 6 - 1 = 5, 6^5 - 1 = 7775 = 5^2 * 311
        assert lte_odd(6, 1, 5, 1, 5) == (1, 2, True)

    def test_rejects_small_v1(self):
        # 3 - 1 = 2: p = 5 does not divide it
        with pytest.raises(ValueError):
            lte_odd(3, 1, 5, 1, 5)

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            lte_odd(10, 1, 2, 1, 2)
        with pytest.raises(ValueError):
            lte_odd(10, 1, 9, 1, 3)
        with pytest.raises(ValueError):
            lte_odd(10, 1, 3, 2, 3)

    @given(
        st.integers(min_value=1, max_value=20),
        st.integers(min_value=1, max_value=20),
        st.sampled_from([3, 5, 7, 11, 13]),
        st.integers(min_value=1, max_value=4),
        st.integers(min_value=1, max_value=5),
    )
    @settings(max_examples=300)
    def test_growth_rule_always_holds(self, s, delta, p, n1, ratio):
        r = s + delta
        if math.gcd(r, s) != 1:
            return
        if r**n1 - s**n1 <= 2 or (r**n1 - s**n1) % p != 0:
            return
        v1, v2, divides = lte_odd(r, s, p, n1, n1 * ratio)
        assert divides
        assert v2 == v1 + valuation(p, ratio)


class TestTwoAdicProfile:
    def test_frozen_examples(self):
        assert two_adic_profile(3, 1, 1, 3) == (1, 2)
        assert two_adic_profile(3, 1, 1, 2) == (3, 1)
        assert two_adic_profile(5, 3, 1, 4) == (5, 1)
        assert two_adic_profile(7, 1, 1, 1) == (1, 3)
        assert two_adic_profile(7, 1, 2, 4) == (5, 1)

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            two_adic_profile(4, 1, 1, 2)
        with pytest.raises(ValueError):
            two_adic_profile(9, 3, 1, 2)
        with pytest.raises(ValueError):
            two_adic_profile(7, 5, 2, 3)

    @given(
        st.integers(min_value=0, max_value=15),
        st.integers(min_value=1, max_value=15),
        st.integers(min_value=1, max_value=6),
        st.integers(min_value=1, max_value=8),
    )
    @settings(max_examples=300)
    def test_matches_direct_valuation(self, shalf, dhalf, n1, ratio):
        s = 2 * shalf + 1
        r = s + 2 * dhalf
        if math.gcd(r, s) != 1:
            return
        n2 = n1 * ratio
        minus, plus = two_adic_profile(r, s, n1, n2)
        assert minus == two_adic(r**n2 - s**n2)
        assert plus == two_adic(r**n2 + s**n2)


class TestPrimeSupport:
    def test_examples(self):
        assert prime_support_subset(8, 2)
        assert prime_support_subset(12, 6)
        assert not prime_support_subset(12, 2)
        assert prime_support_subset(1, 7)
        assert not prime_support_subset(7, 1)
        assert prime_support_subset(2**40 * 3**20, 6)

    @given(st.integers(min_value=1, max_value=10**6), st.integers(min_value=1, max_value=10**6))
    @settings(max_examples=300)
    def test_matches_factorization(self, m, n):
        expected = prime_set(m) <= prime_set(n)
        assert prime_support_subset(m, n) == expected


class TestSamePrimeSetScan:
    def test_difference_hits_match_oracle(self):
        # independent oracle over a small box using factorization directly
        for r in range(2, 12):
            for s in range(1, r):
                if math.gcd(r, s) != 1:
                    continue
                expected = []
                vals = [r**n - s**n for n in range(1, 7)]
                for i in range(6):
                    for j in range(i + 1, 6):
                        if prime_set(vals[j]) <= prime_set(vals[i]):
                            expected.append((i + 1, j + 1))
                assert same_prime_set_scan(r, s, 6, -1) == expected

    def test_known_difference_pair(self):
        # 3^2 - 1 = 8 shares its lone prime with 3 - 1 = 2
        assert (1, 2) in same_prime_set_scan(3, 1, 4, -1)
        assert (1, 2) in same_prime_set_scan(5, 3, 4, -1)

    def test_known_sum_pair(self):
        # 2^3 + 1 = 9 shares its lone prime with 2 + 1 = 3
        assert (1, 3) in same_prime_set_scan(2, 1, 4, 1)

    def test_rejects_bad_sign(self):
        with pytest.raises(ValueError):
            same_prime_set_scan(3, 1, 4, 0)

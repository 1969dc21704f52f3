"""Exact integer arithmetic primitives.

Factorization (trial division + Miller-Rabin + Brent's rho), valuations,
perfect-power detection, and the order/valuation oracles used by the
classification and search layers.  Everything works on plain Python ints,
no floating point is ever trusted for a final answer.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

_TRIAL_LIMIT = 10_000

# Witness set is deterministic for n < 3_317_044_064_679_887_385_961_981
# (about 2^81).  The extra witnesses push reliable coverage far past the
# 512-bit inputs this package ever sees.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def _small_primes() -> tuple[int, ...]:
    global _SMALL_PRIMES
    try:
        return _SMALL_PRIMES
    except NameError:
        pass
    limit = _TRIAL_LIMIT
    mark = bytearray([1]) * (limit + 1)
    mark[0] = mark[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if mark[p]:
            mark[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    _SMALL_PRIMES = tuple(i for i in range(limit + 1) if mark[i])
    return _SMALL_PRIMES


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for the sizes used here."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in _MR_BASES:
        if a >= n:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int, rng: random.Random) -> int:
    """One nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class Factored:
    """An integer together with its complete prime factorization.

    factors is a tuple of (prime, exponent) pairs sorted by prime, and the
    product of prime**exponent recomposes value exactly.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def exponent_of(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def factorize(n: int) -> Factored:
    """Complete factorization of a positive integer.

    Trial division below a fixed bound, then deterministic Miller-Rabin and
    Brent's rho to split whatever survives.  factorize(1) has no factors.
    """
    if n < 1:
        raise ValueError(f"factorize requires a positive integer, got {n}")
    original = n
    found: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    if n > 1:
        rng = random.Random(n)
        stack = [n]
        while stack:
            m = stack.pop()
            if is_prime(m):
                found[m] = found.get(m, 0) + 1
                continue
            d = _brent_rho(m, rng)
            stack.append(d)
            stack.append(m // d)
    return Factored(original, tuple(sorted(found.items())))


def prime_set(n: int) -> frozenset[int]:
    """The set of primes dividing n (empty for n = 1)."""
    return frozenset(factorize(n).primes)


def radical(n: int) -> int:
    """Product of the distinct primes dividing n."""
    return math.prod(factorize(n).primes)


def valuation(p: int, n: int) -> int:
    """Exact exponent of the prime p in n (n nonzero)."""
    if not is_prime(p):
        raise ValueError(f"valuation base {p} is not prime")
    if n == 0:
        raise ValueError("valuation of zero is undefined")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def two_adic(n: int) -> int:
    """Exponent of 2 in n, fast path (n nonzero)."""
    if n == 0:
        raise ValueError("valuation of zero is undefined")
    return (n & -n).bit_length() - 1


def as_power_of(base: int, n: int) -> int | None:
    """The exponent e >= 1 with base**e == n, or None.

    Exact repeated division; no floating point.
    """
    if base < 2:
        raise ValueError(f"power base must be at least 2, got {base}")
    if n < 1:
        return None
    e = 0
    while n > 1 and n % base == 0:
        n //= base
        e += 1
    return e if n == 1 and e >= 1 else None


def introot(n: int, k: int) -> int:
    """Floor of the k-th root of n, exact integer Newton iteration."""
    if n < 0 or k < 1:
        raise ValueError("introot requires n >= 0 and k >= 1")
    if k == 1 or n < 2:
        return n
    if k == 2:
        return math.isqrt(n)
    if n.bit_length() <= k:
        return 1
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def power_representations(n: int, max_exp: int | None = None) -> list[tuple[int, int]]:
    """All pairs (base, e) with base**e == n and e >= 1, exponent 1 included.

    n = 1 yields only the degenerate pair (1, 1).
    """
    if n < 1:
        raise ValueError(f"need a positive integer, got {n}")
    if n == 1:
        return [(1, 1)]
    reps = [(n, 1)]
    top = n.bit_length()
    if max_exp is not None:
        top = min(top, max_exp)
    for e in range(2, top + 1):
        r = introot(n, e)
        if r < 2:
            break
        if r**e == n:
            reps.append((r, e))
    return reps


def least_index(R: int, S: int, M: int, eps: int, cap: int = 10**6) -> int | None:
    """Least t >= 1 with M dividing R**t - (-1)**eps * S**t.

    Returns None when no such t exists below the cap; the caller can tell
    that apart from bad arguments, which raise ValueError.
    """
    if R <= S or S < 1:
        raise ValueError("need R > S >= 1")
    if math.gcd(R, S) != 1:
        raise ValueError("R and S must be coprime")
    if M < 1:
        raise ValueError("modulus must be positive")
    if eps not in (0, 1):
        raise ValueError("eps must be 0 or 1")
    if cap < 1:
        raise ValueError("cap must be positive")
    if M == 1:
        return 1
    rm, sm = R % M, S % M
    rt, st = 1, 1
    for t in range(1, cap + 1):
        rt = rt * rm % M
        st = st * sm % M
        if eps == 0:
            if rt == st:
                return t
        elif (rt + st) % M == 0:
            return t
    return None


def lte_odd(R: int, S: int, p: int, n1: int, n2: int) -> tuple[int, int, bool]:
    """Valuation growth of R**n - S**n at an odd prime p along n1 | n2.

    Returns (v1, v2, divides) where p**v1 and p**v2 exactly divide the n1
    and n2 values and divides reports whether p**(v2 - v1) divides n2/n1.
    Requires gcd(R, S) = 1, R > S, p odd, and p**v1 > 2.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if R <= S or S < 1 or math.gcd(R, S) != 1:
        raise ValueError("need coprime R > S >= 1")
    if n1 < 1 or n2 % n1 != 0:
        raise ValueError("need n1 >= 1 dividing n2")
    v1 = valuation(p, R**n1 - S**n1)
    if p**v1 <= 2:
        raise ValueError(f"p^v1 = {p**v1} <= 2: the growth rule does not apply")
    v2 = valuation(p, R**n2 - S**n2)
    divides = (n2 // n1) % p ** (v2 - v1) == 0
    return v1, v2, divides


def two_adic_profile(R: int, S: int, n1: int, n2: int) -> tuple[int, int]:
    """Exact 2-adic valuations of R**n2 - S**n2 and R**n2 + S**n2.

    Closed form for odd coprime R > S and n1 | n2: an odd ratio n2/n1
    carries the valuations of the n1 values over unchanged, an even ratio
    sends the minus valuation to max(t, u) + v and the plus valuation to 1,
    where 2**v exactly divides n2/n1.
    """
    if R % 2 == 0 or S % 2 == 0:
        raise ValueError("R and S must both be odd")
    if R <= S or S < 1 or math.gcd(R, S) != 1:
        raise ValueError("need coprime R > S >= 1")
    if n1 < 1 or n2 % n1 != 0:
        raise ValueError("need n1 >= 1 dividing n2")
    t = two_adic(R**n1 - S**n1)
    u = two_adic(R**n1 + S**n1)
    v = two_adic(n2 // n1)
    if v == 0:
        return t, u
    return max(t, u) + v, 1


def prime_support_subset(m: int, n: int) -> bool:
    """True iff every prime dividing m also divides n (gcd stripping only)."""
    if m < 1 or n < 1:
        raise ValueError("need positive integers")
    if m == 1:
        return True
    while True:
        g = math.gcd(m, n)
        if g == 1:
            return m == 1
        while g > 1:
            m //= g
            g = math.gcd(m, g)


def same_prime_set_scan(R: int, S: int, nmax: int, sign: int) -> list[tuple[int, int]]:
    """Index pairs n1 < n2 <= nmax where R**n2 -/+ S**n2 has no new primes.

    sign = -1 scans differences, sign = +1 scans sums.  A pair (n1, n2) is
    reported when every prime of the n2 value already divides the n1 value.
    """
    if sign not in (-1, 1):
        raise ValueError("sign must be -1 or +1")
    if R <= S or S < 1 or math.gcd(R, S) != 1:
        raise ValueError("need coprime R > S >= 1")
    if nmax < 2:
        return []
    values = [R**n + sign * S**n for n in range(1, nmax + 1)]
    hits = []
    for i, v1 in enumerate(values):
        for j in range(i + 1, len(values)):
            if prime_support_subset(values[j], v1):
                hits.append((i + 1, j + 1))
    return hits

"""Base triples (a, b, c) and their shared-prime structure.

A triple splits each base into the part supported on the primes common to
all three values and the part coprime to those primes.  When the exponent
vectors of a subset of the common primes are proportional, that subset can
be rewritten as a single common power g, which is what the descent and
search layers work with.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from .arith import Factored, factorize
from .errors import InternalInvariantError, ProportionalityError


@dataclass(frozen=True)
class Triple:
    """A validated base triple with its shared-prime decomposition.

    common_primes holds every prime dividing all of a, b and c, sorted
    ascending.  exponents maps each of those primes p to the exponent
    triple (exponent in a, in b, in c).  a1, b1, c1 are the greatest
    divisors of a, b, c not divisible by any common prime.
    """

    a: int
    b: int
    c: int
    fa: Factored
    fb: Factored
    fc: Factored
    common_primes: tuple[int, ...]
    exponents: dict[int, tuple[int, int, int]]
    a1: int
    b1: int
    c1: int

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"

    def exponent_triple(self, p: int) -> tuple[int, int, int]:
        return self.exponents[p]

    @property
    def has_shared_prime(self) -> bool:
        return bool(self.common_primes)


def build_triple(a: int, b: int, c: int) -> Triple:
    """Factor the three bases and populate the shared-prime fields."""
    for name, v in (("a", a), ("b", b), ("c", c)):
        if v < 2:
            raise ValueError(f"base {name} must be at least 2, got {v}")
    fa, fb, fc = factorize(a), factorize(b), factorize(c)
    common = sorted(frozenset(fa.primes) & frozenset(fb.primes) & frozenset(fc.primes))
    exponents = {p: (fa.exponent_of(p), fb.exponent_of(p), fc.exponent_of(p)) for p in common}
    a1, b1, c1 = a, b, c
    for p, (ea, eb, ec) in exponents.items():
        a1 //= p**ea
        b1 //= p**eb
        c1 //= p**ec
    return Triple(a, b, c, fa, fb, fc, tuple(common), exponents, a1, b1, c1)


@dataclass(frozen=True)
class GDecomposition:
    """A proportional subset of the common primes collapsed to one base g.

    g carries each prime of the subset to its primitive exponent, so the
    subset part of a is exactly g**a_exp, of b is g**b_exp, of c is
    g**c_exp.  residual lists the untouched common primes with their
    exponent triples.
    """

    primes: tuple[int, ...]
    g: int
    a_exp: int
    b_exp: int
    c_exp: int
    residual: tuple[tuple[int, tuple[int, int, int]], ...]


def _proportional(u: tuple[int, int, int], v: tuple[int, int, int]) -> bool:
    # cross-multiplied, exact in integers
    return u[0] * v[1] == v[0] * u[1] and u[0] * v[2] == v[0] * u[2]


def g_decomposition(t: Triple, subset: frozenset[int] | set[int]) -> GDecomposition:
    """Collapse a proportional subset of the shared primes to one base.

    The subset must be nonempty and the exponent triples of its primes
    must be pairwise proportional; otherwise the offending prime pair is
    reported.  The result exponents are the componentwise gcds over the
    subset and g is the product of the primes raised to their primitive
    weights, so g**a_exp recomposes the subset part of a exactly.
    """
    primes = tuple(sorted(subset))
    if not primes:
        raise ValueError("the prime subset must be nonempty")
    for p in primes:
        if p not in t.exponents:
            raise ValueError(f"{p} is not a prime shared by all three bases of {t}")
    pivot = t.exponents[primes[0]]
    for p in primes[1:]:
        if not _proportional(pivot, t.exponents[p]):
            raise ProportionalityError(primes[0], p)
    a_exps = [t.exponents[p][0] for p in primes]
    h = reduce(math.gcd, a_exps)
    weights = [e // h for e in a_exps]
    j = reduce(math.gcd, (t.exponents[p][1] for p in primes))
    m = reduce(math.gcd, (t.exponents[p][2] for p in primes))
    for p, w in zip(primes, weights):
        ea, eb, ec = t.exponents[p]
        if (ea, eb, ec) != (h * w, j * w, m * w):
            raise InternalInvariantError(
                f"componentwise gcds fail to recompose the exponents of {p}"
            )
    g = math.prod(p**w for p, w in zip(primes, weights))
    residual = tuple((p, t.exponents[p]) for p in t.common_primes if p not in subset)
    return GDecomposition(primes, g, h, j, m, residual)


def maximal_proportional_classes(t: Triple) -> list[frozenset[int]]:
    """Partition the shared primes into maximal proportional classes.

    Two primes land in the same class exactly when their exponent triples
    are proportional, which is an equivalence because all exponents are
    positive.  Classes are ordered by their smallest prime.
    """
    buckets: dict[tuple[int, int, int], list[int]] = {}
    for p in t.common_primes:
        ea, eb, ec = t.exponents[p]
        d = math.gcd(ea, math.gcd(eb, ec))
        buckets.setdefault((ea // d, eb // d, ec // d), []).append(p)
    return sorted((frozenset(ps) for ps in buckets.values()), key=min)

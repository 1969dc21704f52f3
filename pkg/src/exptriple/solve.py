"""Bounded enumeration of solutions to a^x + b^y = c^z.

Solutions found below an explicit bit bound are grouped into equivalence
classes (two solutions are the same class when their term multisets
{a^x, b^y} coincide), which is what the class count N counts.  The module
also recognizes the handful of base shapes that admit more than two
solutions, all of which live among powers of two and their neighbours.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .arith import as_power_of, two_adic
from .triple import Triple


@dataclass(frozen=True)
class Solution:
    """One exponent triple (x, y, z), all positive."""

    x: int
    y: int
    z: int

    def key(self) -> tuple[int, int, int]:
        # canonical output order
        return (self.z, self.x, self.y)


def make_solution(t: Triple, x: int, y: int, z: int) -> Solution:
    """Build a solution after checking it exactly against the triple."""
    if x < 1 or y < 1 or z < 1:
        raise ValueError(f"exponents must be positive, got {(x, y, z)}")
    if t.a**x + t.b**y != t.c**z:
        raise ValueError(f"({x}, {y}, {z}) does not solve {t.a}^x + {t.b}^y = {t.c}^z")
    return Solution(x, y, z)


def term_multiset(t: Triple, s: Solution) -> tuple[int, int]:
    """The two left-hand terms of the solution, as a sorted pair."""
    ax, by = t.a**s.x, t.b**s.y
    return (ax, by) if ax <= by else (by, ax)


def correspond(t1: Triple, s1: Solution, t2: Triple, s2: Solution) -> bool:
    """Whether two solutions produce the same multiset of left-hand terms.

    The triples may coincide or differ; equal term multisets are what ties
    a solution of one triple to a solution of another.
    """
    return term_multiset(t1, s1) == term_multiset(t2, s2)


@dataclass(frozen=True)
class SolutionSet:
    """All solutions of a triple below a bit bound, with their classes.

    solutions is sorted by (z, x, y).  classes partitions it by term
    multiset; each class is sorted the same way and classes are ordered by
    their minimal member.  bound_too_small records that c itself did not
    fit below the bound, in which case nothing was enumerated.
    """

    triple: Triple
    max_bits: int
    solutions: tuple[Solution, ...]
    classes: tuple[tuple[Solution, ...], ...]
    bound_too_small: bool = False

    @property
    def raw_count(self) -> int:
        return len(self.solutions)

    @property
    def swap_dedup_count(self) -> int:
        """Solution count where (x,y,z) and (y,x,z) merge when a = b."""
        if self.triple.a != self.triple.b:
            return len(self.solutions)
        return len({(tuple(sorted((s.x, s.y))), s.z) for s in self.solutions})


def count_N(sset: SolutionSet) -> int:
    """The class count N for the enumerated triple."""
    return len(sset.classes)


def enumerate_solutions(t: Triple, max_bits: int) -> SolutionSet:
    """Find every solution with c^z below 2**max_bits.

    Walks z upward, and for each z walks the powers of a below c^z,
    testing whether the difference is a power of b by table lookup.  The
    result is complete below the stated bound and makes no claim above it.
    """
    if max_bits < 1:
        raise ValueError("max_bits must be positive")
    limit = 1 << max_bits
    if t.c >= limit:
        warnings.warn(
            f"base c = {t.c} does not fit below 2^{max_bits}; nothing enumerated",
            stacklevel=2,
        )
        return SolutionSet(t, max_bits, (), (), bound_too_small=True)
    a_powers = []
    ax = t.a
    while ax < limit:
        a_powers.append(ax)
        ax *= t.a
    b_power_of = {}
    by, y = t.b, 1
    while by < limit:
        b_power_of[by] = y
        by *= t.b
        y += 1
    found = []
    cz, z = t.c, 1
    while cz < limit:
        for x, ax in enumerate(a_powers, start=1):
            if ax >= cz:
                break
            y = b_power_of.get(cz - ax)
            if y is not None:
                found.append(Solution(x, y, z))
        cz *= t.c
        z += 1
    found.sort(key=Solution.key)
    by_terms: dict[tuple[int, int], list[Solution]] = {}
    for s in found:
        by_terms.setdefault(term_multiset(t, s), []).append(s)
    classes = tuple(
        tuple(cl) for cl in sorted(by_terms.values(), key=lambda cl: cl[0].key())
    )
    return SolutionSet(t, max_bits, tuple(found), classes)


@dataclass(frozen=True)
class SpecialShape:
    """A matched many-solution base shape with its parameters.

    tags: "coprime-352" for {3,5} against 2; "two-two" for (2, 2, 2^e*3);
    "two-eight" for {2,8} against 2^(3t)*3; "mersenne-pair" for a = b one
    below a power of two with c twice a power of a; "all-two-powers" when
    every base is a power of two and the exponents allow solutions.
    predicted is the complete solution list for the finite shapes and
    empty for "all-two-powers", whose solutions form an infinite sequence.
    """

    tag: str
    params: dict[str, int]
    predicted: tuple[Solution, ...]


def detect_special_case(t: Triple) -> SpecialShape | None:
    """Match a triple against the shapes with more than two solutions."""
    a, b, c = t.a, t.b, t.c
    if {a, b} == {3, 5} and c == 2:
        if a == 3:
            pred = (Solution(1, 1, 3), Solution(3, 1, 5), Solution(1, 3, 7))
        else:
            pred = (Solution(1, 1, 3), Solution(1, 3, 5), Solution(3, 1, 7))
        return SpecialShape("coprime-352", {}, pred)
    if a == 2 and b == 2:
        e = two_adic(c)
        if e >= 1 and c >> e == 3:
            pred = (
                Solution(e + 1, e, 1),
                Solution(e, e + 1, 1),
                Solution(2 * e + 3, 2 * e, 2),
                Solution(2 * e, 2 * e + 3, 2),
            )
            return SpecialShape("two-two", {"gamma": e}, pred)
    if {a, b} == {2, 8}:
        e = two_adic(c)
        if e >= 3 and e % 3 == 0 and c >> e == 3:
            s = e // 3
            pred = (
                Solution(3 * s + 1, s, 1),
                Solution(6 * s + 3, 2 * s, 2),
                Solution(6 * s, 2 * s + 1, 2),
            )
            if a == 8:
                pred = tuple(Solution(p.y, p.x, p.z) for p in pred)
            pred = tuple(sorted(pred, key=Solution.key))
            return SpecialShape("two-eight", {"t": s, "swapped": int(a == 8)}, pred)
    if a == b and a >= 3:
        k = as_power_of(2, a + 1)
        if k is not None and c % 2 == 0:
            e = as_power_of(a, c // 2) if c // 2 > 1 else None
            if e is not None:
                pred = (
                    Solution(e, e, 1),
                    Solution(k * e, k * e + 1, k),
                    Solution(k * e + 1, k * e, k),
                )
                pred = tuple(sorted(pred, key=Solution.key))
                return SpecialShape("mersenne-pair", {"k": k, "gamma": e}, pred)
    u, v, w = as_power_of(2, a), as_power_of(2, b), as_power_of(2, c)
    if u is not None and v is not None and w is not None and math.gcd(u * v, w) == 1:
        return SpecialShape("all-two-powers", {"u": u, "v": v, "w": w}, ())
    return None


def power_of_two_solutions(u: int, v: int, w: int, t_max: int) -> list[Solution]:
    """Parametric solutions of 2^(ux) + 2^(vy) = 2^(wz) up to a step bound.

    Both left terms must be the equal power 2^(tL) for L = lcm(u, v), and
    the step t must satisfy tL = -1 mod w; every emitted solution is
    verified by substitution.
    """
    if u < 1 or v < 1 or w < 1 or t_max < 1:
        raise ValueError("need positive u, v, w, t_max")
    if math.gcd(u * v, w) != 1:
        raise ValueError(f"gcd(uv, w) = {math.gcd(u * v, w)} leaves no solutions")
    g = math.gcd(u, v)
    big_l = u // g * v
    out = []
    for step in range(1, t_max + 1):
        if (step * big_l + 1) % w:
            continue
        x, y, z = step * v // g, step * u // g, (step * big_l + 1) // w
        if (1 << u * x) + (1 << v * y) != 1 << w * z:
            raise AssertionError("parametric power-of-two solution failed to verify")
        out.append(Solution(x, y, z))
    return out

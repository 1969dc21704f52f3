"""The four infinite families of two-solution nine-tuples.

A nine-tuple packs a base triple with two distinct verified solutions.
Four parametric families generate such nine-tuples endlessly:

  I   (2, 2^u (2^(h-1) - 1), 2^u (2^(h-1) + 1))        u > 0, h > 1
      solutions (u+1, 1, 1) and (2u+h+1, 2, 2)
  II  (2 * 3^t, 3, 3)                                   t > 0
      solutions (1, t, t+1) and (3, 3t, 3t+2)
  III (g^j, g^(ju) d, g^(ju) (d+1))                     g odd > 1
      solutions (u, 1, 1) and (ku + w/j, k, k)
      with (d+1)^k - d^k = g^w, k > 1, j | w
  IV  (2^i g^j, 2^(iu-1) g^(ju) d, 2^(iu-1) g^(ju) (d+2))
      solutions (u, 1, 1) and (ku + w/j, k, k)
      with g odd > 1, d odd > 1, k even, g^w the greatest odd
      divisor of (d+2)^k - d^k, j | w, and k - v = h - iw/j where
      2^h exactly divides 2d+2 and 2^v exactly divides k

Family IV requires g > 1; allowing g = 1 would reproduce every family I
member with shifted parameters, so the constraint keeps I and IV
disjoint.

Membership comes in two strengths.  in_F asks whether the ordered
nine-tuple literally equals a generated member.  in_family asks whether
some member's two solutions produce the same two term multisets as the
input's solutions (in either order), which is decided here in closed
form: every candidate parameter is pinned down by exact root and
valuation extractions from the term values, so a miss is a definitive
"not in the family", not a search giving up.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import as_power_of, power_representations, two_adic
from .errors import FamilyConstraintError
from .solve import Solution

FAMILY_TAGS = ("I", "II", "III", "IV")

_PARAM_KEYS = {
    "I": ("u", "h"),
    "II": ("t",),
    "III": ("g", "j", "u", "d", "k", "w"),
    "IV": ("g", "i", "j", "u", "d", "k", "w"),
}


@dataclass(frozen=True)
class NineTuple:
    """A base triple with two distinct verified solutions."""

    a: int
    b: int
    c: int
    s1: Solution
    s2: Solution

    def as_tuple(self) -> tuple[int, int, int, int, int, int, int, int, int]:
        return (
            self.a, self.b, self.c,
            self.s1.x, self.s1.y, self.s1.z,
            self.s2.x, self.s2.y, self.s2.z,
        )

    def term_pairs(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """The two left-hand term multisets, each as a sorted pair."""
        return (_terms(self.a, self.b, self.s1), _terms(self.a, self.b, self.s2))

    def solutions_correspond(self) -> bool:
        first, second = self.term_pairs()
        return first == second

    def __str__(self) -> str:
        return "(%d,%d,%d, %d,%d,%d, %d,%d,%d)" % self.as_tuple()


def _terms(a: int, b: int, s: Solution) -> tuple[int, int]:
    ax, by = a**s.x, b**s.y
    return (ax, by) if ax <= by else (by, ax)


def make_nine_tuple(
    a: int, b: int, c: int,
    x1: int, y1: int, z1: int,
    x2: int, y2: int, z2: int,
) -> NineTuple:
    """Validate and pack a nine-tuple; both solutions must check exactly."""
    for name, v in (("a", a), ("b", b), ("c", c)):
        if v < 2:
            raise ValueError(f"base {name} must be at least 2, got {v}")
    if (x1, y1, z1) == (x2, y2, z2):
        raise ValueError("the two solutions must be distinct ordered triples")
    for x, y, z in ((x1, y1, z1), (x2, y2, z2)):
        if x < 1 or y < 1 or z < 1:
            raise ValueError(f"exponents must be positive, got {(x, y, z)}")
        if a**x + b**y != c**z:
            raise ValueError(
                f"({x},{y},{z}) does not solve {a}^x + {b}^y = {c}^z"
            )
    return NineTuple(a, b, c, Solution(x1, y1, z1), Solution(x2, y2, z2))


@dataclass(frozen=True)
class FamilyWitness:
    """Proof of family membership: a generated member plus the matching.

    matching[i] is the index (0 or 1) of the input solution whose term
    multiset equals that of member solution i; (0, 1) means same order.
    """

    family: str
    params: dict[str, int]
    member: NineTuple
    matching: tuple[int, int]


def _require_keys(tag: str, params: dict[str, int]) -> None:
    want = set(_PARAM_KEYS[tag])
    got = set(params)
    extra = got - want - ({"h", "v"} if tag == "IV" else set())
    if extra or not want <= got:
        raise ValueError(
            f"family {tag} takes parameters {sorted(want)}, got {sorted(got)}"
        )


def gen_family(tag: str, params: dict[str, int]) -> NineTuple:
    """Instantiate one family member, naming every violated constraint."""
    if tag not in FAMILY_TAGS:
        raise ValueError(f"unknown family tag {tag!r}")
    _require_keys(tag, params)
    if tag == "I":
        return _gen_i(params["u"], params["h"])
    if tag == "II":
        return _gen_ii(params["t"])
    if tag == "III":
        return _gen_iii(
            params["g"], params["j"], params["u"], params["d"], params["k"], params["w"]
        )
    return _gen_iv(
        params["g"], params["i"], params["j"], params["u"],
        params["d"], params["k"], params["w"],
        params.get("h"), params.get("v"),
    )


def _gen_i(u: int, h: int) -> NineTuple:
    bad = []
    if u < 1:
        bad.append("u must be positive")
    if h < 2:
        bad.append("h must be at least 2")
    if bad:
        raise FamilyConstraintError("I", bad)
    half = 1 << (h - 1)
    return make_nine_tuple(
        2, (half - 1) << u, (half + 1) << u,
        u + 1, 1, 1,
        2 * u + h + 1, 2, 2,
    )


def _gen_ii(t: int) -> NineTuple:
    if t < 1:
        raise FamilyConstraintError("II", ["t must be positive"])
    return make_nine_tuple(2 * 3**t, 3, 3, 1, t, t + 1, 3, 3 * t, 3 * t + 2)


def _gen_iii(g: int, j: int, u: int, d: int, k: int, w: int) -> NineTuple:
    bad = []
    if g < 3 or g % 2 == 0:
        bad.append("g must be odd and exceed 1")
    for name, v in (("j", j), ("u", u), ("d", d), ("w", w)):
        if v < 1:
            bad.append(f"{name} must be positive")
    if k < 2:
        bad.append("k must exceed 1")
    if bad:
        raise FamilyConstraintError("III", bad)
    if (d + 1) ** k - d**k != g**w:
        bad.append("g^w must equal (d+1)^k - d^k")
    if w % j:
        bad.append("j must divide w")
    if bad:
        raise FamilyConstraintError("III", bad)
    base = g ** (j * u)
    return make_nine_tuple(
        g**j, base * d, base * (d + 1),
        u, 1, 1,
        k * u + w // j, k, k,
    )


def _gen_iv(
    g: int, i: int, j: int, u: int, d: int, k: int, w: int,
    h: int | None = None, v: int | None = None,
) -> NineTuple:
    bad = []
    if g < 3 or g % 2 == 0:
        bad.append("g must be odd and exceed 1")
    for name, val in (("i", i), ("j", j), ("u", u), ("w", w)):
        if val < 1:
            bad.append(f"{name} must be positive")
    if d < 1 or d % 2 == 0:
        bad.append("d must be odd and positive")
    elif d == 1:
        bad.append("d must exceed 1")
    if k < 2 or k % 2:
        bad.append("k must be even and positive")
    if bad:
        raise FamilyConstraintError("IV", bad)
    diff = (d + 2) ** k - d**k
    odd_part = diff >> two_adic(diff)
    if g**w != odd_part:
        bad.append("g^w must equal the greatest odd divisor of (d+2)^k - d^k")
    if w % j:
        bad.append("j must divide w")
    want_h = two_adic(2 * d + 2)
    want_v = two_adic(k)
    if h is not None and h != want_h:
        bad.append(f"h must be {want_h}, the exact 2-exponent of 2d+2")
    if v is not None and v != want_v:
        bad.append(f"v must be {want_v}, the exact 2-exponent of k")
    if not bad and k - want_v != want_h - i * w // j:
        bad.append("k - v must equal h - iw/j")
    if bad:
        raise FamilyConstraintError("IV", bad)
    base = 2 ** (i * u - 1) * g ** (j * u)
    return make_nine_tuple(
        2**i * g**j, base * d, base * (d + 2),
        u, 1, 1,
        k * u + w // j, k, k,
    )


def _iv_full_params(params: dict[str, int]) -> dict[str, int]:
    out = dict(params)
    out["h"] = two_adic(2 * params["d"] + 2)
    out["v"] = two_adic(params["k"])
    return out


def _param_key(params: dict[str, int]) -> tuple[int, ...]:
    # lexicographic order over alphabetically sorted parameter names
    return tuple(params[k] for k in sorted(params))


def _try_gen(tag: str, params: dict[str, int]) -> NineTuple | None:
    try:
        return gen_family(tag, params)
    except FamilyConstraintError:
        return None


# ---------------------------------------------------------------------------
# exact membership: the ordered nine-tuple equals a generated member
# ---------------------------------------------------------------------------

def in_F(nine: NineTuple) -> FamilyWitness | None:
    """Exact membership: does the ordered nine-tuple equal a member?

    Parameters are solved from the tuple's shape, then the candidate
    member is regenerated and compared field by field.  When several
    parameter maps regenerate the same member (a base can be a perfect
    power in more than one way), the lexicographically least map wins,
    comparing values in alphabetical parameter order.
    """
    for solver in (_in_f_i, _in_f_ii, _in_f_iii, _in_f_iv):
        witness = solver(nine)
        if witness is not None:
            return witness
    return None


def _in_f_i(nine: NineTuple) -> FamilyWitness | None:
    s1, s2 = nine.s1, nine.s2
    if nine.a != 2 or (s1.y, s1.z) != (1, 1) or (s2.y, s2.z) != (2, 2):
        return None
    # c - b = 2^(u+1) and (b + c)/2 = 2^(u+h-1)
    e = as_power_of(2, nine.c - nine.b) if nine.c > nine.b else None
    if e is None or e < 2:
        return None
    u = e - 1
    e2 = as_power_of(2, (nine.b + nine.c) // 2)
    if e2 is None or e2 <= u:
        return None
    params = {"u": u, "h": e2 - u + 1}
    if _try_gen("I", params) == nine:
        return FamilyWitness("I", params, nine, (0, 1))
    return None


def _in_f_ii(nine: NineTuple) -> FamilyWitness | None:
    if nine.b != 3 or nine.c != 3:
        return None
    params = {"t": nine.s1.y}
    if _try_gen("II", params) == nine:
        return FamilyWitness("II", params, nine, (0, 1))
    return None


def _in_f_iii(nine: NineTuple) -> FamilyWitness | None:
    s1, s2 = nine.s1, nine.s2
    if nine.a % 2 == 0 or (s1.y, s1.z) != (1, 1) or s2.y != s2.z:
        return None
    u, k = s1.x, s2.y
    if k < 2:
        return None
    step = nine.c - nine.b          # g^(ju), so a^u must equal it
    if step < 1 or nine.b % step or nine.a**u != step:
        return None
    d = nine.b // step
    target = (d + 1) ** k - d**k
    best = None
    for g, e in reversed(power_representations(nine.a)):
        if g < 3 or g % 2 == 0:
            continue
        w = as_power_of(g, target) if target > 1 else None
        if w is None:
            continue
        params = {"g": g, "j": e, "u": u, "d": d, "k": k, "w": w}
        if _try_gen("III", params) == nine:
            key = _param_key(params)
            if best is None or key < best[0]:
                best = (key, params)
    if best is None:
        return None
    return FamilyWitness("III", best[1], nine, (0, 1))


def _in_f_iv(nine: NineTuple) -> FamilyWitness | None:
    s1, s2 = nine.s1, nine.s2
    if nine.a % 2 or (s1.y, s1.z) != (1, 1) or s2.y != s2.z:
        return None
    u, k = s1.x, s2.y
    if k < 2 or k % 2:
        return None
    step = nine.c - nine.b          # a^u = 2^(iu) g^(ju)
    if step < 1 or nine.a**u != step:
        return None
    if (2 * nine.b) % step:
        return None
    d = 2 * nine.b // step
    if d < 3 or d % 2 == 0:
        return None
    i = two_adic(nine.a)            # a = 2^i g^j with g odd
    big_g = nine.a >> i             # g^j
    if big_g < 3:
        return None
    diff = (d + 2) ** k - d**k
    odd_part = diff >> two_adic(diff)
    best = None
    for g, m in reversed(power_representations(big_g)):
        if g < 3 or g % 2 == 0:
            continue
        w = as_power_of(g, odd_part) if odd_part > 1 else None
        if w is None:
            continue
        params = {"g": g, "i": i, "j": m, "u": u, "d": d, "k": k, "w": w}
        if _try_gen("IV", params) == nine:
            full = _iv_full_params(params)
            key = _param_key(full)
            if best is None or key < best[0]:
                best = (key, full)
    if best is None:
        return None
    return FamilyWitness("IV", best[1], nine, (0, 1))


# ---------------------------------------------------------------------------
# correspondence membership: term multisets match some member's, either order
# ---------------------------------------------------------------------------

def in_family(nine: NineTuple) -> FamilyWitness | None:
    """Membership up to solution correspondence, decided in closed form.

    Tries both pairings of the input solutions against a member's two
    solutions.  All candidate parameters are extracted exactly from the
    term values (roots, 2-adic valuations, perfect-power tests), so a
    None result is a definitive non-membership, not an exhausted search.
    Within one family the lexicographically least parameter map wins;
    families are tried in order I, II, III, IV.
    """
    first, second = nine.term_pairs()
    pairings = (((first, second), (0, 1)), ((second, first), (1, 0)))
    for solver in (_member_i, _member_ii, _member_iii, _member_iv):
        for (low, high), matching in pairings:
            witness = solver(low, high, matching)
            if witness is not None:
                return witness
    return None


def _member_i(
    first: tuple[int, int], second: tuple[int, int], matching: tuple[int, int]
) -> FamilyWitness | None:
    # first should be {2^(u+1), 2^u (2^(h-1) - 1)}
    best = None
    for p, q in (first, first[::-1]):
        e = as_power_of(2, p)
        if e is None or e < 2:
            continue
        u = e - 1
        if q % (1 << u):
            continue
        half = (q >> u) + 1         # 2^(h-1)
        hm = as_power_of(2, half)
        if hm is None:
            continue
        h = hm + 1
        sq = (q >> u) ** 2 << (2 * u)
        if second != tuple(sorted((1 << (2 * u + h + 1), sq))):
            continue
        params = {"u": u, "h": h}
        member = _try_gen("I", params)
        if member is None:
            continue
        key = _param_key(params)
        if best is None or key < best[0]:
            best = (key, params, member)
    if best is None:
        return None
    return FamilyWitness("I", best[1], best[2], matching)


def _member_ii(
    first: tuple[int, int], second: tuple[int, int], matching: tuple[int, int]
) -> FamilyWitness | None:
    # first should be {3^t, 2 * 3^t}
    for p, q in (first, first[::-1]):
        t = as_power_of(3, p)
        if t is None or q != 2 * p:
            continue
        cube = p**3
        if second != (cube, 8 * cube):
            continue
        member = _try_gen("II", {"t": t})
        if member is not None:
            return FamilyWitness("II", {"t": t}, member, matching)
    return None


def _member_iii(
    first: tuple[int, int], second: tuple[int, int], matching: tuple[int, int]
) -> FamilyWitness | None:
    # first = {P, P*d} with P = g^(ju); second = {P^k * g^w, (P*d)^k}
    best = None
    for p, q in (first, first[::-1]):
        if p % 2 == 0 or q % p:
            continue
        d = q // p
        for p2, q2 in (second, second[::-1]):
            k = as_power_of(q, q2)
            if k is None or k < 2:
                continue
            target = (d + 1) ** k - d**k
            if target <= 1 or p2 != p**k * target:
                continue
            for g, e in reversed(power_representations(p)):
                if g < 3 or g % 2 == 0:
                    continue
                w = as_power_of(g, target)
                if w is None:
                    continue
                params = {"g": g, "j": 1, "u": e, "d": d, "k": k, "w": w}
                member = _try_gen("III", params)
                if member is None:
                    continue
                if member.term_pairs() != (first, second):
                    continue
                key = _param_key(params)
                if best is None or key < best[0]:
                    best = (key, params, member)
    if best is None:
        return None
    return FamilyWitness("III", best[1], best[2], matching)


def _member_iv(
    first: tuple[int, int], second: tuple[int, int], matching: tuple[int, int]
) -> FamilyWitness | None:
    # first = {P, P*d/2} with P = 2^(iu) g^(ju) = a^u
    # second = {P^k * 2^(iw/j) g^w, (P*d/2)^k}
    best = None
    for p, q in (first, first[::-1]):
        big_e = two_adic(p)
        if big_e < 1 or two_adic(q) != big_e - 1:
            continue
        big_g = p >> big_e          # g^(ju)
        if big_g < 3:
            continue
        odd_q = q >> (big_e - 1)
        if odd_q % big_g:
            continue
        d = odd_q // big_g
        if d < 3 or d % 2 == 0:
            continue
        for p2, q2 in (second, second[::-1]):
            k = as_power_of(q, q2)
            if k is None or k < 2 or k % 2:
                continue
            diff = (d + 2) ** k - d**k
            odd_part = diff >> two_adic(diff)
            if odd_part <= 1:
                continue
            h = two_adic(2 * d + 2)
            v = two_adic(k)
            for g, m in reversed(power_representations(big_g)):
                if g < 3 or g % 2 == 0:
                    continue
                w = as_power_of(g, odd_part)
                if w is None or (big_e * w) % m:
                    continue
                shift = big_e * w // m          # iw/j for any split of m
                if k - v != h - shift:
                    continue
                if p2 != (p**k << shift) * g**w:
                    continue
                u = math.gcd(big_e, m)          # largest split gives least i
                j = m // u
                if w % j:
                    continue
                params = {
                    "g": g, "i": big_e // u, "j": j, "u": u,
                    "d": d, "k": k, "w": w,
                }
                member = _try_gen("IV", params)
                if member is None:
                    continue
                if member.term_pairs() != (first, second):
                    continue
                full = _iv_full_params(params)
                key = _param_key(full)
                if best is None or key < best[0]:
                    best = (key, full, member)
    if best is None:
        return None
    return FamilyWitness("IV", best[1], best[2], matching)


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    """Verdict for a nine-tuple: a family witness or anomalous."""

    kind: str                       # "family" or "anomalous"
    witness: FamilyWitness | None

    @property
    def family(self) -> str | None:
        return self.witness.family if self.witness else None


def classify_nine(nine: NineTuple) -> Classification:
    """Decide family membership or anomaly for a two-solution nine-tuple.

    Requires gcd(a, b) > 1 and two non-corresponding solutions; inputs
    whose solutions share a term multiset are rejected since they count
    as a single solution class.
    """
    if math.gcd(nine.a, nine.b) == 1:
        raise ValueError("classification requires gcd(a, b) > 1")
    if nine.solutions_correspond():
        raise ValueError(
            "solutions correspond (same term multiset); "
            "a nine-tuple needs two genuinely different solution classes"
        )
    witness = in_family(nine)
    if witness is not None:
        return Classification("family", witness)
    return Classification("anomalous", None)


def canonical_nine(nine: NineTuple) -> NineTuple:
    """Normalize a nine-tuple so equivalent records compare equal.

    Three normalizations are applied, none of which changes the two term
    values of either solution:

    * every base that is a perfect power is replaced by its primitive
      root, multiplying that base's exponents (a scales x, b scales y,
      c scales z) by the extracted power;
    * the bases a and b are put in non-decreasing order, swapping each
      solution's x and y when a and b trade places;
    * the two solutions are sorted by their (z, x, y) key.

    When a == b after reduction both orientations describe the same
    data, so the lexicographically smaller tuple is chosen.
    """
    ra, ea = power_representations(nine.a)[-1]
    rb, eb = power_representations(nine.b)[-1]
    rc, ec = power_representations(nine.c)[-1]
    sols = [
        Solution(s.x * ea, s.y * eb, s.z * ec) for s in (nine.s1, nine.s2)
    ]
    flipped = [Solution(s.y, s.x, s.z) for s in sols]
    if ra < rb:
        picks = [(ra, rb, sols)]
    elif rb < ra:
        picks = [(rb, ra, flipped)]
    else:
        picks = [(ra, rb, sols), (rb, ra, flipped)]
    candidates = []
    for a, b, pair in picks:
        first, second = sorted(pair, key=Solution.key)
        candidates.append(
            (a, b, rc, first.x, first.y, first.z, second.x, second.y, second.z)
        )
    return make_nine_tuple(*min(candidates))

"""
Cyclically decreasing elements, weak strips, and weak tableaux.

A proper subset A of Z/nZ determines the cyclically decreasing element
c_A; a weak strip from w is an interval w -> c_A * w in left weak order
with additive length.  The A-nice / A-bad calculus gives an O(n) strip
test; enumeration goes by brute force over subsets with a length check,
and the two routes are compared in the test suite.
"""

from __future__ import annotations

import itertools

from dataclasses import dataclass
from functools import cache

from .affperm import AffinePermutation, identity, simple_reflection

__all__ = [
    "FullSet",
    "InvalidStrip",
    "normalize_residues",
    "cyclic_components",
    "cyclically_decreasing",
    "cyclically_increasing",
    "is_nice",
    "is_bad",
    "apply_cA",
    "WeakStrip",
    "DualWeakStrip",
    "weak_strip_between",
    "weak_strip_is_valid",
    "weak_strip_length_check",
    "weak_strips_from",
    "dual_weak_strips_from",
    "WeakTableau",
    "weak_tableaux",
    "count_weak_tableaux",
    "count_standard_weak",
    "parse_residue_set",
    "format_residue_set",
]


class FullSet(ValueError):
    """The residue subset must be proper."""


class InvalidStrip(ValueError):
    """Claimed strip fails the weak-order length condition."""


def normalize_residues(n: int, members) -> frozenset[int]:
    out = frozenset(a % n for a in members)
    if len(out) >= n:
        raise FullSet(f"residue set must be a proper subset of Z/{n}Z")
    return out


def cyclic_components(n: int, members) -> list[tuple[int, int]]:
    """Maximal cyclic intervals [a, b] of A, ordered by smallest member.

    >>> cyclic_components(10, {0, 1, 3, 4, 6, 9})
    [(9, 1), (3, 4), (6, 6)]
    """
    a_set = normalize_residues(n, members)
    comps = []
    for start in sorted(a_set):
        if (start - 1) % n in a_set:
            continue  # not the low end of its interval
        end = start
        while (end + 1) % n in a_set:
            end = (end + 1) % n
        comps.append((start, end))
    comps.sort(key=lambda c: min(_interval_members(n, c)))
    return comps


def _interval_members(n: int, comp: tuple[int, int]) -> list[int]:
    a, b = comp
    out = [a]
    while a != b:
        a = (a + 1) % n
        out.append(a)
    return out


def cyclically_decreasing(n: int, members) -> AffinePermutation:
    """c_A = product over cyclic components [a,b] of s_b s_{b-1} ... s_a."""
    w = identity(n)
    for a, b in cyclic_components(n, members):
        letters = list(reversed(_interval_members(n, (a, b))))
        for r in letters:
            w = w * simple_reflection(n, r)
    return w


def cyclically_increasing(n: int, members) -> AffinePermutation:
    """Same product with each interval taken in increasing order."""
    w = identity(n)
    for a, b in cyclic_components(n, members):
        for r in _interval_members(n, (a, b)):
            w = w * simple_reflection(n, r)
    return w


def is_nice(n: int, a_set: frozenset[int], x: int) -> bool:
    return (x - 1) % n not in a_set


def is_bad(n: int, a_set: frozenset[int], x: int) -> bool:
    return x % n not in a_set


def apply_cA(n: int, members, i: int) -> int:
    """Evaluate c_A at i by the closed form, without building the product.

    If i is A-nice the value is j - 1 for the next A-nice j > i;
    otherwise it is i - 1.
    """
    a_set = normalize_residues(n, members)
    if not is_nice(n, a_set, i):
        return i - 1
    j = i + 1
    while not is_nice(n, a_set, j):
        j += 1
    return j - 1


@dataclass(frozen=True)
class WeakStrip:
    """Interval w -> v = c_A * w in left weak order with ell(v) = ell(w) + |A|."""

    inside: AffinePermutation
    residues: frozenset[int]
    outside: AffinePermutation

    def __post_init__(self):
        n = self.inside.n
        object.__setattr__(self, "residues", normalize_residues(n, self.residues))
        if self.outside.n != n:
            raise InvalidStrip("inside and outside rank differ")
        if not weak_strip_is_valid(self.inside, self.residues, self.outside):
            raise InvalidStrip(
                f"{self.inside} -> {self.outside} is not a weak strip for A={sorted(self.residues)}"
            )

    @property
    def size(self) -> int:
        return len(self.residues)

    def __repr__(self):
        return f"WeakStrip({self.inside} --{sorted(self.residues)}--> {self.outside})"


def weak_strip_is_valid(w: AffinePermutation, members, v: AffinePermutation) -> bool:
    """O(n) strip test: v = c_A w and, for every pair of consecutive A-nice
    integers a < b, the position of a under w precedes those of a+1..b-1."""
    n = w.n
    a_set = normalize_residues(n, members)
    if cyclically_decreasing(n, a_set) * w != v:
        return False
    nice = sorted(x for x in range(n) if is_nice(n, a_set, x))
    for idx, a in enumerate(nice):
        b = nice[idx + 1] if idx + 1 < len(nice) else nice[0] + n
        if b == a + 1:
            continue
        pos_a = w.position_of(a)
        if any(w.position_of(x) < pos_a for x in range(a + 1, b)):
            return False
    return True


def weak_strip_length_check(w: AffinePermutation, members, v: AffinePermutation) -> bool:
    """Independent strip test by explicit length additivity."""
    n = w.n
    a_set = normalize_residues(n, members)
    return cyclically_decreasing(n, a_set) * w == v and v.length == w.length + len(a_set)


def weak_strip_between(w: AffinePermutation, v: AffinePermutation) -> WeakStrip | None:
    """The weak strip from w to v if one exists, else None."""
    from .affperm import reduced_word

    n = w.n
    if v.n != n:
        return None
    r = v.length - w.length
    if r == 0:
        return WeakStrip(w, frozenset(), v) if w == v else None
    if r < 0 or r >= n:
        return None
    c = v * w.inverse()
    word = reduced_word(c)
    if len(word) != r:
        return None
    members = frozenset(word)
    if len(members) != r:
        return None
    if cyclically_decreasing(n, members) != c:
        return None
    return WeakStrip(w, members, v)


def weak_strips_from(w: AffinePermutation, r: int) -> list[WeakStrip]:
    """All weak strips of size r with the given inside.

    Brute force over all r-subsets of Z/nZ, validated by length additivity.
    """
    n = w.n
    if not 0 <= r <= n - 1:
        return []
    if r == 0:
        return [WeakStrip(w, frozenset(), w)]
    out = []
    for combo in itertools.combinations(range(n), r):
        members = frozenset(combo)
        v = cyclically_decreasing(n, members) * w
        if v.length == w.length + r:
            out.append(WeakStrip(w, members, v))
    return out


@dataclass(frozen=True)
class DualWeakStrip:
    """Interval w -> v with v * w^{-1} cyclically increasing, length-additive."""

    inside: AffinePermutation
    residues: frozenset[int]
    outside: AffinePermutation

    def __post_init__(self):
        n = self.inside.n
        object.__setattr__(self, "residues", normalize_residues(n, self.residues))
        ok = (
            cyclically_increasing(n, self.residues) * self.inside == self.outside
            and self.outside.length == self.inside.length + len(self.residues)
        )
        if not ok:
            raise InvalidStrip(f"{self.inside} -> {self.outside} is not a dual weak strip")

    @property
    def size(self) -> int:
        return len(self.residues)


def dual_weak_strips_from(w: AffinePermutation, r: int) -> list[DualWeakStrip]:
    n = w.n
    if not 0 <= r <= n - 1:
        return []
    if r == 0:
        return [DualWeakStrip(w, frozenset(), w)]
    out = []
    for combo in itertools.combinations(range(n), r):
        members = frozenset(combo)
        v = cyclically_increasing(n, members) * w
        if v.length == w.length + r:
            out.append(DualWeakStrip(w, members, v))
    return out


@dataclass(frozen=True)
class WeakTableau:
    """Chain of weak strips; stored trimmed of trailing empty strips."""

    inside: AffinePermutation
    strips: tuple[WeakStrip, ...]

    def __post_init__(self):
        strips = tuple(self.strips)
        cur = self.inside
        for s in strips:
            if s.inside != cur:
                raise InvalidStrip("weak tableau strips do not chain")
            cur = s.outside
        while strips and strips[-1].size == 0:
            strips = strips[:-1]
        object.__setattr__(self, "strips", strips)

    @property
    def outside(self) -> AffinePermutation:
        return self.strips[-1].outside if self.strips else self.inside

    def weight(self) -> tuple[int, ...]:
        return tuple(s.size for s in self.strips)


def weak_tableaux(inside: AffinePermutation, outside: AffinePermutation) -> list[WeakTableau]:
    """All weak tableaux from inside to outside with positive strip sizes.

    Weight compositions containing zeros correspond bijectively to these by
    deleting trivial strips, so enumeration is restricted to positive sizes.
    """
    out = []

    def grow(chain: tuple[WeakStrip, ...], cur: AffinePermutation):
        if cur == outside:
            out.append(WeakTableau(inside, chain))
        budget = outside.length - cur.length
        for r in range(1, min(cur.n - 1, budget) + 1):
            for strip in weak_strips_from(cur, r):
                grow(chain + (strip,), strip.outside)

    if outside.length >= inside.length:
        grow((), inside)
    return out


@cache
def _count_weak(inside: AffinePermutation, outside: AffinePermutation, comp: tuple[int, ...]) -> int:
    if not comp:
        return 1 if inside == outside else 0
    r, rest = comp[0], comp[1:]
    total = 0
    for strip in weak_strips_from(inside, r):
        total += _count_weak(strip.outside, outside, rest)
    return total


def count_weak_tableaux(inside: AffinePermutation, outside: AffinePermutation, weight) -> int:
    """Number of weak tableaux with the given weight composition.

    Zero parts are allowed (they force trivial strips) and are dropped.
    """
    comp = tuple(r for r in weight if r != 0)
    if any(r < 0 or r >= inside.n for r in comp):
        return 0
    if sum(comp) != outside.length - inside.length:
        return 0
    return _count_weak(inside, outside, comp)


@cache
def count_standard_weak(w: AffinePermutation) -> int:
    """Number of standard weak tableaux of shape w, i.e. reduced words of w."""
    if w.is_identity:
        return 1
    total = 0
    for r in range(w.n):
        if w.has_left_descent(r):
            total += count_standard_weak(simple_reflection(w.n, r) * w)
    return total


def weak_order_lower(v: AffinePermutation) -> set[AffinePermutation]:
    """All w with w <= v in left weak order, by stripping left descents."""
    seen = {v}
    frontier = [v]
    while frontier:
        cur = frontier.pop()
        for r in range(cur.n):
            if cur.has_left_descent(r):
                w = simple_reflection(cur.n, r) * cur
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
    return seen


def weak_order_upper(u: AffinePermutation, max_extra: int) -> set[AffinePermutation]:
    """All z with u <= z in left weak order and ell(z) <= ell(u) + max_extra."""
    seen = {u}
    frontier = [(u, 0)]
    while frontier:
        cur, d = frontier.pop()
        if d == max_extra:
            continue
        for r in range(cur.n):
            if not cur.has_left_descent(r):
                z = simple_reflection(cur.n, r) * cur
                if z not in seen:
                    seen.add(z)
                    frontier.append((z, d + 1))
    return seen


def format_residue_set(n: int, members) -> str:
    return "{" + ",".join(str(a) for a in sorted(normalize_residues(n, members))) + "}"


def parse_residue_set(text: str, n: int) -> frozenset[int]:
    """Parse '{0,1,3}' with residues in [0, n)."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"residue set text must be braced: {text!r}")
    inner = text[1:-1].strip()
    members = [int(p) for p in inner.split(",")] if inner else []
    if any(not 0 <= a < n for a in members):
        raise ValueError(f"residues must lie in [0, {n}): {text!r}")
    return normalize_residues(n, members)

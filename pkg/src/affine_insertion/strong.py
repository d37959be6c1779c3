"""
Strong (Bruhat) covers, marked covers, strong strips and strong tableaux.

A cover w -> w*t_{ij} raises length by one; the cover criterion is the
interval test on window values.  A marked cover additionally fixes a
straddling translate i <= l < j of the reflection and carries the mark
m(C) = w(j).  Distinct straddling translates of one reflection are
distinct marked covers; their number is the affine Chevalley multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .affperm import AffinePermutation, canonical_reflection, right_mult_transposition

__all__ = [
    "NotACover",
    "InvalidStrongStrip",
    "is_cover_pair",
    "is_strong_cover",
    "reflection_of_cover",
    "MarkedStrongCover",
    "marked_covers_above",
    "marked_covers_below",
    "chevalley_multiplicity",
    "StrongStrip",
    "strong_strips_from",
    "strong_strips_ending_at",
    "StrongTableau",
    "strong_tableaux",
    "count_strong_tableaux",
    "count_standard_strong",
]


class NotACover(ValueError):
    """The given pair is not a strong cover."""


class InvalidStrongStrip(ValueError):
    """Cover chain is broken or marks fail to increase."""


def is_cover_pair(w: AffinePermutation, i: int, j: int) -> bool:
    """True iff w is covered by w*t_{ij}: w(i) < w(j) and no window value
    in between sits at a position strictly between i and j."""
    if i >= j or (i - j) % w.n == 0:
        return False
    wi, wj = w(i), w(j)
    if wi >= wj:
        return False
    return all(not wi <= w(k) <= wj for k in range(i + 1, j))


def reflection_of_cover(w: AffinePermutation, u: AffinePermutation) -> tuple[int, int] | None:
    """Positions (i, j), canonical 1 <= i <= n, with u = w * t_{ij}, if any."""
    n = w.n
    diff = [x for x in range(1, n + 1) if w.window[x - 1] != u.window[x - 1]]
    if len(diff) != 2:
        return None
    a, b = diff
    # u must move a translate of the other class's value into position a
    j = w.position_of(u(a))
    if (j - b) % n != 0:
        return None
    if right_mult_transposition(w, a, j) != u:
        return None
    return canonical_reflection(n, a, j)


def is_strong_cover(w: AffinePermutation, u: AffinePermutation) -> bool:
    """True iff u covers w in strong order (length check deferred to the
    interval criterion, which is equivalent and cheaper)."""
    if w.n != u.n:
        return False
    refl = reflection_of_cover(w, u)
    if refl is None:
        return False
    i, j = refl
    return is_cover_pair(w, i, j)


@dataclass(frozen=True)
class MarkedStrongCover:
    """Strong cover w -> u = w*t_{ij} with a straddling translate i <= l < j."""

    inside: AffinePermutation
    i: int
    j: int
    outside: AffinePermutation
    l: int

    def __post_init__(self):
        w, i, j = self.inside, self.i, self.j
        if not i <= self.l < j:
            raise NotACover(f"({i},{j}) does not straddle l={self.l}")
        if not is_cover_pair(w, i, j):
            raise NotACover(f"{w} -({i},{j})-> is not a strong cover")
        if right_mult_transposition(w, i, j) != self.outside:
            raise NotACover("outside element does not match w * t_ij")

    @property
    def mark(self) -> int:
        return self.inside(self.j)

    def __repr__(self):
        return f"MarkedStrongCover({self.inside} --({self.i},{self.j})@{self.mark}--> {self.outside})"


def _cover_candidates(w: AffinePermutation, i: int, upward: bool):
    """Candidate partners j > i for a cover at position i, using the bound
    that a cover has either j - i < n or window values within distance n."""
    n = w.n
    cands = set(range(i + 1, i + n))
    wi = w(i)
    vals = range(wi + 1, wi + n) if upward else range(wi - n + 1, wi)
    for v in vals:
        j = w.position_of(v)
        if j > i and (j - i) % n != 0:
            cands.add(j)
    return cands


def marked_covers_above(w: AffinePermutation, l: int) -> list[MarkedStrongCover]:
    """Every marked strong cover with the given inside, sorted by (mark, i)."""
    n = w.n
    covers = []
    for i in range(l - n + 1, l + 1):
        for j in _cover_candidates(w, i, upward=True):
            if not is_cover_pair(w, i, j):
                continue
            u = right_mult_transposition(w, i, j)
            # straddling translates (i + kn, j + kn): k in [floor((l-j)/n)+1, 0]
            for k in range((l - j) // n + 1, 1):
                covers.append(MarkedStrongCover(w, i + k * n, j + k * n, u, l))
    covers.sort(key=lambda c: (c.mark, c.i))
    return covers


def marked_covers_below(w: AffinePermutation, l: int) -> list[MarkedStrongCover]:
    """Every marked strong cover with the given outside, sorted by (mark, i)."""
    n = w.n
    covers = []
    for i in range(l - n + 1, l + 1):
        for j in _cover_candidates(w, i, upward=False):
            v = right_mult_transposition(w, i, j)
            if not is_cover_pair(v, i, j):
                continue
            for k in range((l - j) // n + 1, 1):
                covers.append(MarkedStrongCover(v, i + k * n, j + k * n, w, l))
    covers.sort(key=lambda c: (c.mark, c.i))
    return covers


def chevalley_multiplicity(w: AffinePermutation, u: AffinePermutation, l: int) -> int:
    """Number of straddling pairs (i, j) realizing the cover w -> u."""
    hits = sum(1 for c in marked_covers_above(w, l) if c.outside == u)
    if hits == 0:
        raise NotACover(f"{u} does not cover {w}")
    return hits


@dataclass(frozen=True)
class StrongStrip:
    """Chain of marked strong covers with strictly increasing marks."""

    inside: AffinePermutation
    covers: tuple[MarkedStrongCover, ...]

    def __post_init__(self):
        object.__setattr__(self, "covers", tuple(self.covers))
        cur = self.inside
        prev_mark = None
        for c in self.covers:
            if c.inside != cur:
                raise InvalidStrongStrip("covers do not chain")
            if prev_mark is not None and c.mark <= prev_mark:
                raise InvalidStrongStrip(f"marks not increasing: {prev_mark} then {c.mark}")
            prev_mark = c.mark
            cur = c.outside

    @property
    def outside(self) -> AffinePermutation:
        return self.covers[-1].outside if self.covers else self.inside

    @property
    def size(self) -> int:
        return len(self.covers)

    @property
    def first(self) -> MarkedStrongCover:
        return self.covers[0]

    @property
    def last(self) -> MarkedStrongCover:
        return self.covers[-1]

    def appended(self, cover: MarkedStrongCover) -> StrongStrip:
        return StrongStrip(self.inside, self.covers + (cover,))

    def prepended(self, cover: MarkedStrongCover) -> StrongStrip:
        return StrongStrip(cover.inside, (cover,) + self.covers)

    def render(self) -> str:
        """Text form 'w --(i,j)@m--> u --(i',j')@m'--> x'."""
        parts = [str(self.inside)]
        for c in self.covers:
            parts.append(f"--({c.i},{c.j})@{c.mark}-->")
            parts.append(str(c.outside))
        return " ".join(parts)

    def __repr__(self):
        return f"StrongStrip({self.render()})"


def strong_strips_from(w: AffinePermutation, r: int, l: int) -> list[StrongStrip]:
    """All strong strips of size r with the given inside."""
    if r < 0:
        return []
    strips = [StrongStrip(w, ())]
    for _ in range(r):
        nxt = []
        for s in strips:
            floor = s.last.mark if s.covers else None
            for c in marked_covers_above(s.outside, l):
                if floor is None or c.mark > floor:
                    nxt.append(s.appended(c))
        strips = nxt
    return strips


def strong_strips_ending_at(x: AffinePermutation, r: int, l: int) -> list[StrongStrip]:
    """All strong strips of size r with the given outside."""
    if r < 0:
        return []
    strips = [StrongStrip(x, ())]
    for _ in range(r):
        nxt = []
        for s in strips:
            ceil = s.first.mark if s.covers else None
            for c in marked_covers_below(s.inside, l):
                if ceil is None or c.mark < ceil:
                    nxt.append(s.prepended(c))
        strips = nxt
    return strips


@dataclass(frozen=True)
class StrongTableau:
    """Chain of strong strips; stored trimmed of trailing empty strips."""

    inside: AffinePermutation
    strips: tuple[StrongStrip, ...]

    def __post_init__(self):
        strips = tuple(self.strips)
        cur = self.inside
        for s in strips:
            if s.inside != cur:
                raise InvalidStrongStrip("strong tableau strips do not chain")
            cur = s.outside
        while strips and strips[-1].size == 0:
            strips = strips[:-1]
        object.__setattr__(self, "strips", strips)

    @property
    def outside(self) -> AffinePermutation:
        return self.strips[-1].outside if self.strips else self.inside

    def weight(self) -> tuple[int, ...]:
        return tuple(s.size for s in self.strips)

    def covers(self) -> list[MarkedStrongCover]:
        return [c for s in self.strips for c in s.covers]


def strong_tableaux(inside: AffinePermutation, outside: AffinePermutation, l: int) -> list[StrongTableau]:
    """All strong tableaux from inside to outside with positive strip sizes."""
    out = []

    def grow(chain: tuple[StrongStrip, ...], cur: AffinePermutation):
        if cur == outside:
            out.append(StrongTableau(inside, chain))
        budget = outside.length - cur.length
        for r in range(1, budget + 1):
            for strip in strong_strips_from(cur, r, l):
                grow(chain + (strip,), strip.outside)

    if outside.length >= inside.length:
        grow((), inside)
    return out


@cache
def _count_strong(inside: AffinePermutation, outside: AffinePermutation, comp: tuple[int, ...], l: int) -> int:
    if not comp:
        return 1 if inside == outside else 0
    r, rest = comp[0], comp[1:]
    total = 0
    for strip in strong_strips_from(inside, r, l):
        total += _count_strong(strip.outside, outside, rest, l)
    return total


def count_strong_tableaux(inside: AffinePermutation, outside: AffinePermutation, weight, l: int) -> int:
    """Number of strong tableaux with the given weight composition."""
    comp = tuple(r for r in weight if r != 0)
    if any(r < 0 for r in comp):
        return 0
    if sum(comp) != outside.length - inside.length:
        return 0
    return _count_strong(inside, outside, comp, l)


@cache
def count_standard_strong(w: AffinePermutation, l: int) -> int:
    """Number of standard strong tableaux of shape w (all strips of size 1)."""
    if w.is_identity:
        return 1
    return sum(count_standard_strong(c.inside, l) for c in marked_covers_below(w, l))

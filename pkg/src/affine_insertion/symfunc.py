"""
Degree-truncated weight generating functions: strong and weak Schur
functions, k-Schur monomial expansions (plain and spin-graded), the affine
Cauchy identity, the four Pieri rules, and basis expansions.

Nothing here manipulates infinitely many variables.  A generating function
is held either as a WeightPolynomial (counts per positive weight
composition; zero parts force trivial strips and are stripped) or as a
SymPolynomial (integer coefficients on monomial symmetric functions).
Identity checks compare coefficients composition by composition, which is
exact power-series equality and needs no symmetry assumption.
"""

from __future__ import annotations

import itertools

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .affperm import AffinePermutation, identity
from .cores import core_of_bounded, grassmannian_of, grassmannians_by_length, partitions
from .strong import count_strong_tableaux, strong_strips_from
from .weak import (
    count_weak_tableaux,
    dual_weak_strips_from,
    weak_order_lower,
    weak_order_upper,
    weak_strips_from,
)

__all__ = [
    "SingularSystem",
    "DegreeOverflow",
    "NotBounded",
    "compositions",
    "count_matrices",
    "WeightPolynomial",
    "SymmetryReport",
    "SymPolynomial",
    "SpinPolynomial",
    "h_poly",
    "e_poly",
    "strong_weight_function",
    "weak_weight_function",
    "strong_schur",
    "weak_schur",
    "k_schur",
    "k_schur_spin",
    "CauchyReport",
    "cauchy_check",
    "PieriReport",
    "pieri_checks",
    "expand_in_basis",
    "structure_constants",
]


class SingularSystem(ValueError):
    """Basis expansion hit a rank-deficient or inconsistent system."""


class DegreeOverflow(ValueError):
    """Requested computation exceeds the degree bound."""


class NotBounded(ValueError):
    """Partition is not n-bounded."""


def compositions(total: int, max_parts: int | None = None):
    """Positive integer compositions of total, at most max_parts parts."""
    if total == 0:
        yield ()
        return
    if max_parts is not None and max_parts <= 0:
        return
    for first in range(1, total + 1):
        rest_parts = None if max_parts is None else max_parts - 1
        for rest in compositions(total - first, rest_parts):
            yield (first,) + rest


@cache
def count_matrices(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    """Nonnegative integer matrices with the given row and column sums."""
    if sum(rows) != sum(cols):
        return 0
    if not rows:
        return 1
    first, rest = rows[0], rows[1:]
    total = 0
    for split in _bounded_vectors(cols, first):
        total += count_matrices(rest, tuple(c - g for c, g in zip(cols, split)))
    return total


def _bounded_vectors(bounds: tuple[int, ...], total: int):
    """Nonnegative vectors below bounds componentwise with the given sum."""
    if not bounds:
        if total == 0:
            yield ()
        return
    for first in range(min(bounds[0], total) + 1):
        for rest in _bounded_vectors(bounds[1:], total - first):
            yield (first,) + rest


@dataclass(frozen=True)
class SymmetryReport:
    symmetric: bool
    failures: tuple[tuple[tuple[int, ...], tuple[int, ...], int, int], ...] = ()
    # each failure: (partition, offending composition, count at partition, count there)


@dataclass(frozen=True)
class WeightPolynomial:
    """Counts per positive weight composition, all of one total degree."""

    degree: int
    coeffs: dict[tuple[int, ...], int]

    def __getitem__(self, comp) -> int:
        key = tuple(c for c in comp if c)
        return self.coeffs.get(key, 0)

    def symmetry_report(self) -> SymmetryReport:
        failures = []
        for lam in partitions(self.degree):
            base = self.coeffs.get(lam, 0)
            for comp in set(itertools.permutations(lam)):
                got = self.coeffs.get(comp, 0)
                if got != base:
                    failures.append((lam, comp, base, got))
        return SymmetryReport(not failures, tuple(failures))

    def to_monomial(self) -> SymPolynomial:
        return SymPolynomial(
            self.degree,
            {lam: c for lam, c in self.coeffs.items() if tuple(sorted(lam, reverse=True)) == lam and c},
        )


@dataclass(frozen=True)
class SymPolynomial:
    """Integer combination of monomial symmetric functions up to a degree."""

    degree: int
    coeffs: dict[tuple[int, ...], int]

    def __post_init__(self):
        cleaned = {}
        for lam, c in self.coeffs.items():
            lam = tuple(lam)
            if sum(lam) > self.degree:
                raise DegreeOverflow(f"{lam} exceeds degree bound {self.degree}")
            if c:
                cleaned[lam] = c
        object.__setattr__(self, "coeffs", cleaned)

    def __add__(self, other: SymPolynomial) -> SymPolynomial:
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymPolynomial(max(self.degree, other.degree), out)

    def __mul__(self, other: SymPolynomial) -> SymPolynomial:
        """Product via expansion in finitely many variables.

        degree-many variables are enough to separate all monomial symmetric
        functions up to the product degree.
        """
        deg = self.degree + other.degree
        nvars = max(deg, 1)
        left = _expand_in_vars(self, nvars)
        right = _expand_in_vars(other, nvars)
        acc: dict[tuple[int, ...], int] = {}
        for ea, ca in left.items():
            for eb, cb in right.items():
                key = tuple(a + b for a, b in zip(ea, eb))
                acc[key] = acc.get(key, 0) + ca * cb
        out: dict[tuple[int, ...], int] = {}
        for expo, c in acc.items():
            lam = tuple(sorted((x for x in expo if x), reverse=True))
            if expo == _padded(lam, nvars):
                out[lam] = c
        return SymPolynomial(deg, out)

    def truncate_bounded(self, n: int) -> SymPolynomial:
        """Image in the quotient dropping m_lam with lam_1 >= n."""
        return SymPolynomial(self.degree, {l: c for l, c in self.coeffs.items() if not l or l[0] < n})

    def homogeneous_piece(self, d: int) -> dict[tuple[int, ...], int]:
        return {l: c for l, c in self.coeffs.items() if sum(l) == d}

    def __eq__(self, other) -> bool:
        return isinstance(other, SymPolynomial) and self.coeffs == other.coeffs


def _padded(t: tuple[int, ...], size: int) -> tuple[int, ...]:
    return t + (0,) * (size - len(t))


def _distinct_perms(items: tuple[int, ...]):
    if not items:
        yield ()
        return
    seen = set()
    for k, x in enumerate(items):
        if x in seen:
            continue
        seen.add(x)
        for rest in _distinct_perms(items[:k] + items[k + 1 :]):
            yield (x,) + rest


def _expand_in_vars(p: SymPolynomial, nvars: int) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for lam, c in p.coeffs.items():
        if len(lam) > nvars:
            continue
        for expo in _distinct_perms(_padded(lam, nvars)):
            out[expo] = out.get(expo, 0) + c
    return out


def h_poly(r: int, degree: int | None = None) -> SymPolynomial:
    """Complete homogeneous h_r = sum of all m_lam with |lam| = r."""
    return SymPolynomial(degree or r, {lam: 1 for lam in partitions(r)})


def e_poly(r: int, degree: int | None = None) -> SymPolynomial:
    """Elementary e_r = m_(1^r)."""
    return SymPolynomial(degree or r, {(1,) * r if r else (): 1})


def strong_weight_function(u: AffinePermutation, v: AffinePermutation, l: int) -> WeightPolynomial:
    """Counts of strong tableaux of shape u/v per weight composition."""
    d = u.length - v.length
    if d < 0:
        return WeightPolynomial(0, {})
    return WeightPolynomial(
        d, {comp: c for comp in compositions(d) if (c := count_strong_tableaux(v, u, comp, l))}
    )


def weak_weight_function(u: AffinePermutation, v: AffinePermutation) -> WeightPolynomial:
    """Counts of weak tableaux of shape u/v per weight composition."""
    d = u.length - v.length
    if d < 0:
        return WeightPolynomial(0, {})
    return WeightPolynomial(
        d, {comp: c for comp in compositions(d) if (c := count_weak_tableaux(v, u, comp))}
    )


def strong_schur(
    u: AffinePermutation, v: AffinePermutation, l: int = 0
) -> tuple[SymPolynomial, SymmetryReport]:
    """Monomial expansion of the strong Schur function with symmetry report.

    Symmetry is a theorem for Grassmannian shapes over the identity and a
    conjecture in general, so the report is returned instead of asserted.
    """
    wf = strong_weight_function(u, v, l)
    return wf.to_monomial(), wf.symmetry_report()


def weak_schur(u: AffinePermutation, v: AffinePermutation) -> SymPolynomial:
    """Monomial expansion of the weak Schur function; symmetry is asserted."""
    wf = weak_weight_function(u, v)
    report = wf.symmetry_report()
    assert report.symmetric, f"weak Schur symmetry failed: {report.failures[:3]}"
    return wf.to_monomial()


def _grassmannian_from_bounded(b, n: int) -> AffinePermutation:
    b = tuple(b)
    if b and b[0] >= n:
        raise NotBounded(f"{b} is not {n}-bounded")
    return grassmannian_of(core_of_bounded(b, n), n)


def k_schur(b, n: int) -> SymPolynomial:
    """Monomial expansion of the k-Schur function of an n-bounded partition,
    as the strong Schur function of its Grassmannian element (k = n-1)."""
    u = _grassmannian_from_bounded(b, n)
    poly, report = strong_schur(u, identity(n), l=0)
    assert report.symmetric, f"k-Schur must be symmetric; failures {report.failures[:3]}"
    return poly


@dataclass(frozen=True)
class SpinPolynomial:
    """Coefficients on pairs (partition, spin)."""

    degree: int
    coeffs: dict[tuple[tuple[int, ...], int], int]

    def collapse(self) -> SymPolynomial:
        """Set t = 1: forget the spin grading."""
        out: dict[tuple[int, ...], int] = {}
        for (lam, _spin), c in self.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymPolynomial(self.degree, out)


def k_schur_spin(b, n: int) -> SpinPolynomial:
    """Spin-graded monomial expansion: strong tableaux graded by spin."""
    from .cores import spin_tableau
    from .strong import StrongTableau

    u = _grassmannian_from_bounded(b, n)
    e = identity(n)
    d = u.length
    out: dict[tuple[tuple[int, ...], int], int] = {}

    def grow(cur, strips, rest, lam):
        if not rest:
            if cur == u:
                key = (lam, spin_tableau(StrongTableau(e, tuple(strips))))
                out[key] = out.get(key, 0) + 1
            return
        for strip in strong_strips_from(cur, rest[0], 0):
            grow(strip.outside, strips + [strip], rest[1:], lam)

    for lam in partitions(d):
        grow(e, [], lam, lam)
    return SpinPolynomial(d, out)


@dataclass(frozen=True)
class CauchyReport:
    ok: bool
    checked: int
    mismatches: tuple = ()


def _omega_coefficient(n: int, alpha: tuple[int, ...], beta: tuple[int, ...]) -> int:
    """[x^alpha y^beta] of the affine Cauchy kernel: matrices with row sums
    beta (each part < n forced by the kernel) and column sums alpha."""
    if any(b >= n for b in beta):
        return 0
    return count_matrices(beta, alpha)


def cauchy_check(
    n: int,
    l: int = 0,
    dx: int = 3,
    vy: int = 2,
    u: AffinePermutation | None = None,
    v: AffinePermutation | None = None,
) -> CauchyReport:
    """Coefficientwise check of the (generalized) affine Cauchy identity.

    Compares [x^alpha y^beta] of Omega_n(x,y) * sum_w Strong_{u/w} Weak_{v/w}
    against sum_z Strong_{z/v} Weak_{z/u}, for |alpha| <= dx over
    dx x-variables and vy y-variables.  u = v = id gives the plain identity.
    """
    u = u if u is not None else identity(n)
    v = v if v is not None else identity(n)
    px = max(dx, 1)

    alphas = [a for total in range(dx + 1) for a in _vectors(px, total)]
    betas = [b for total in range(vy * (n - 1) + 1) for b in _vectors(vy, total) if all(x < n for x in b)]

    ws = [w for w in weak_order_lower(v) if w.length <= u.length]
    f_coeffs: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
    for w in ws:
        da, db = u.length - w.length, v.length - w.length
        if da < 0 or da > dx or db > vy * (n - 1):
            continue
        for alpha in alphas:
            if sum(alpha) != da:
                continue
            ca = count_strong_tableaux(w, u, alpha, l)
            if not ca:
                continue
            for beta in betas:
                if sum(beta) != db:
                    continue
                cb = count_weak_tableaux(w, v, beta)
                if cb:
                    f_coeffs[(alpha, beta)] = f_coeffs.get((alpha, beta), 0) + ca * cb

    max_z = min(v.length + dx, u.length + vy * (n - 1))
    zs = [z for z in weak_order_upper(u, max(0, max_z - u.length)) if z.length >= v.length]

    checked = 0
    mismatches = []
    for alpha in alphas:
        for beta in betas:
            da, db = sum(alpha), sum(beta)
            lhs = 0
            for (a1, b1), cf in f_coeffs.items():
                if all(x >= y for x, y in zip(alpha, a1)) and all(x >= y for x, y in zip(beta, b1)):
                    a2 = tuple(x - y for x, y in zip(alpha, a1))
                    b2 = tuple(x - y for x, y in zip(beta, b1))
                    lhs += cf * _omega_coefficient(n, a2, b2)
            rhs = 0
            for z in zs:
                if z.length - v.length == da and z.length - u.length == db:
                    cs = count_strong_tableaux(v, z, alpha, l)
                    if cs:
                        rhs += cs * count_weak_tableaux(u, z, beta)
            checked += 1
            if lhs != rhs:
                mismatches.append((alpha, beta, lhs, rhs))
    return CauchyReport(not mismatches, checked, tuple(mismatches))


def _vectors(length: int, total: int):
    """Nonnegative integer vectors of the given length and sum."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _vectors(length - 1, total - first):
            yield (first,) + rest


@dataclass(frozen=True)
class PieriReport:
    ok: bool
    variant: str
    degree: int
    mismatches: tuple = ()


def _convolve_h(counts, r: int, alpha: tuple[int, ...]) -> int:
    """[x^alpha] (h_r * f) from composition counts of f."""
    total = 0
    for gamma in _bounded_vectors(alpha, r):
        total += counts(tuple(a - g for a, g in zip(alpha, gamma)))
    return total


def _convolve_e(counts, r: int, alpha: tuple[int, ...]) -> int:
    """[x^alpha] (e_r * f): exponents of e_r are 0/1 vectors."""
    total = 0
    for ones in itertools.combinations(range(len(alpha)), r):
        if all(alpha[i] >= 1 for i in ones):
            gamma = tuple(1 if i in ones else 0 for i in range(len(alpha)))
            total += counts(tuple(a - g for a, g in zip(alpha, gamma)))
    return total


def pieri_checks(n: int, l: int, w: AffinePermutation, r: int) -> dict[str, PieriReport]:
    """Verify all four Pieri rules at w for one r, composition by composition.

    strong:      h_r * Strong_w = sum over weak strips w -> z of Strong_z
    dual strong: e_r * Strong_w = sum over dual weak strips
    weak:        h_r * Weak_w   = sum over strong strips from w   (in the
                 bounded quotient: compositions with all parts < n)
    dual weak:   e_r * Weak_w   = sum over strong strips from w^{-1},
                 outsides inverted (bounded quotient)
    """
    e = identity(n)
    d = w.length + r
    reports = {}

    strong_w = strong_weight_function(w, e, l)
    weak_targets = [s.outside for s in weak_strips_from(w, r)]
    strong_targets = [strong_weight_function(z, e, l) for z in weak_targets]
    mism = []
    for alpha in compositions(d):
        lhs = _convolve_h(lambda c: strong_w[c], r, alpha)
        rhs = sum(t[alpha] for t in strong_targets)
        if lhs != rhs:
            mism.append((alpha, lhs, rhs))
    reports["strong"] = PieriReport(not mism, "strong", d, tuple(mism))

    dual_targets = [strong_weight_function(s.outside, e, l) for s in dual_weak_strips_from(w, r)]
    mism = []
    for alpha in compositions(d):
        lhs = _convolve_e(lambda c: strong_w[c], r, alpha)
        rhs = sum(t[alpha] for t in dual_targets)
        if lhs != rhs:
            mism.append((alpha, lhs, rhs))
    reports["dual_strong"] = PieriReport(not mism, "dual_strong", d, tuple(mism))

    weak_w = weak_weight_function(w, e)
    strong_strip_targets = [weak_weight_function(s.outside, e) for s in strong_strips_from(w, r, l)]
    mism = []
    for alpha in compositions(d):
        if any(a >= n for a in alpha):
            continue
        lhs = _convolve_h(lambda c: weak_w[c], r, alpha)
        rhs = sum(t[alpha] for t in strong_strip_targets)
        if lhs != rhs:
            mism.append((alpha, lhs, rhs))
    reports["weak"] = PieriReport(not mism, "weak", d, tuple(mism))

    winv = w.inverse()
    dual_weak_targets = [
        weak_weight_function(s.outside.inverse(), e) for s in strong_strips_from(winv, r, l)
    ]
    mism = []
    for alpha in compositions(d):
        if any(a >= n for a in alpha):
            continue
        lhs = _convolve_e(lambda c: weak_w[c], r, alpha)
        rhs = sum(t[alpha] for t in dual_weak_targets)
        if lhs != rhs:
            mism.append((alpha, lhs, rhs))
    reports["dual_weak"] = PieriReport(not mism, "dual_weak", d, tuple(mism))
    return reports


def _solve_integer_system(rows: list[list[int]], rhs: list[int]) -> list[int]:
    """Solve an exact, possibly overdetermined linear system over Q and
    demand an integer solution; raise SingularSystem otherwise."""
    m, k = len(rows), (len(rows[0]) if rows else 0)
    a = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        a[r] = [x / a[r][c] for x in a[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    if len(pivots) < k:
        raise SingularSystem("basis vectors are dependent at this degree")
    for i in range(r, m):
        if a[i][k]:
            raise SingularSystem("inconsistent system: input outside the span")
    sol = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        sol[c] = a[i][k]
    if any(x.denominator != 1 for x in sol):
        raise SingularSystem(f"non-integer expansion coefficients: {sol}")
    return [int(x) for x in sol]


def expand_in_basis(
    f: SymPolynomial, basis: str, n: int, l: int = 0
) -> dict[AffinePermutation, int]:
    """Expand f over the strong (k-Schur) or weak (affine Schur) basis.

    The strong basis spans the subring generated by h_1..h_{n-1}; the weak
    basis spans the bounded quotient, where f is first truncated.
    """
    if basis not in ("strong", "weak"):
        raise ValueError(f"unknown basis {basis!r}")
    if basis == "weak":
        f = f.truncate_bounded(n)
    out: dict[AffinePermutation, int] = {}
    for d in range(f.degree + 1):
        piece = f.homogeneous_piece(d)
        elements = grassmannians_by_length(n, d)
        if basis == "strong":
            keys = sorted(partitions(d))
            vecs = [strong_schur(wv, identity(n), l)[0] for wv in elements]
        else:
            keys = sorted(lam for lam in partitions(d) if not lam or lam[0] < n)
            vecs = [weak_schur(wv, identity(n)) for wv in elements]
        if not piece:
            continue
        if not elements:
            raise SingularSystem(f"no basis elements at degree {d}")
        rows = [[vec.coeffs.get(key, 0) for vec in vecs] for key in keys]
        rhs = [piece.get(key, 0) for key in keys]
        for coeff, wv in zip(_solve_integer_system(rows, rhs), elements):
            if coeff:
                out[wv] = coeff
    return out


def structure_constants(
    u: AffinePermutation, v: AffinePermutation, basis: str, n: int, l: int = 0
) -> dict[AffinePermutation, int]:
    """Schubert structure constants by expanding a product of basis elements."""
    if basis == "strong":
        fu, _ = strong_schur(u, identity(n), l)
        fv, _ = strong_schur(v, identity(n), l)
    elif basis == "weak":
        fu = weak_schur(u, identity(n))
        fv = weak_schur(v, identity(n))
    else:
        raise ValueError(f"unknown basis {basis!r}")
    return expand_in_basis(fu * fv, basis, n, l)

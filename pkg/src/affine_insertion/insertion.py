"""
Growth diagrams assembling the local rule into the global insertion map
between triples (T, U, m) and pairs (P, Q), plus the classical RSK oracle.

The diagram is a grid of group elements with strong-strip rows and
weak-strip columns; every cell is one application of the local rule to its
north and west edges with excitation m_ij.  Matrix indices are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .affperm import AffinePermutation, identity
from .localrule import CaseTag, FinalPair, InitialTriple, phi_with_audit, psi_with_audit
from .strong import StrongStrip, StrongTableau
from .weak import WeakStrip, WeakTableau

__all__ = [
    "InputNotBounded",
    "WeightOverflow",
    "InvalidPair",
    "BoundedMatrix",
    "GrowthDiagram",
    "affine_insert",
    "affine_uninsert",
    "grassmannian_rsk",
    "classical_rsk",
    "classical_unrsk",
]


class InputNotBounded(ValueError):
    """Matrix has a row sum of at least n."""


class WeightOverflow(ValueError):
    """wt(U) + rowsums(m) exceeds n-1 in some row."""


class InvalidPair(ValueError):
    """(P, Q) do not bound a growth diagram."""


@dataclass(frozen=True)
class BoundedMatrix:
    """Nonnegative integer matrix with finite support, 1-based indices."""

    entries: dict[tuple[int, int], int]

    def __post_init__(self):
        cleaned = {}
        for (i, j), v in self.entries.items():
            if i < 1 or j < 1 or v < 0:
                raise ValueError(f"bad matrix entry {v} at ({i}, {j})")
            if v:
                cleaned[(i, j)] = v
        object.__setattr__(self, "entries", cleaned)

    @classmethod
    def from_rows(cls, rows) -> BoundedMatrix:
        return cls({(i, j): v for i, row in enumerate(rows, 1) for j, v in enumerate(row, 1)})

    def to_rows(self) -> list[list[int]]:
        r, c = self.nrows, self.ncols
        return [[self.entries.get((i, j), 0) for j in range(1, c + 1)] for i in range(1, r + 1)]

    @property
    def nrows(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def ncols(self) -> int:
        return max((j for _, j in self.entries), default=0)

    def rowsums(self, upto: int | None = None) -> tuple[int, ...]:
        r = self.nrows if upto is None else upto
        return tuple(sum(v for (i, _), v in self.entries.items() if i == row) for row in range(1, r + 1))

    def colsums(self, upto: int | None = None) -> tuple[int, ...]:
        c = self.ncols if upto is None else upto
        return tuple(sum(v for (_, j), v in self.entries.items() if j == col) for col in range(1, c + 1))

    def __eq__(self, other):
        return isinstance(other, BoundedMatrix) and self.entries == other.entries


@dataclass
class GrowthDiagram:
    """Computed grid: vertices, strong rows, weak columns, entries, audits."""

    n: int
    l: int
    nrows: int
    ncols: int
    vertices: dict[tuple[int, int], AffinePermutation] = field(default_factory=dict)
    hstrips: dict[tuple[int, int], StrongStrip] = field(default_factory=dict)
    vstrips: dict[tuple[int, int], WeakStrip] = field(default_factory=dict)
    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    audits: dict[tuple[int, int], tuple[CaseTag, ...]] = field(default_factory=dict)

    def row_tableau(self, i: int) -> StrongTableau:
        strips = tuple(self.hstrips[(i, j)] for j in range(1, self.ncols + 1))
        return StrongTableau(self.vertices[(i, 0)], strips)

    def column_tableau(self, j: int) -> WeakTableau:
        strips = tuple(self.vstrips[(i, j)] for i in range(1, self.nrows + 1))
        return WeakTableau(self.vertices[(0, j)], strips)


def _padded_strong(t: StrongTableau, count: int) -> list[StrongStrip]:
    strips = list(t.strips)
    cur = t.outside
    while len(strips) < count:
        strips.append(StrongStrip(cur, ()))
    return strips


def _padded_weak(t: WeakTableau, count: int) -> list[WeakStrip]:
    strips = list(t.strips)
    cur = t.outside
    while len(strips) < count:
        strips.append(WeakStrip(cur, frozenset(), cur))
    return strips


def affine_insert(
    u: AffinePermutation,
    v: AffinePermutation,
    t_tab: StrongTableau,
    u_tab: WeakTableau,
    m: BoundedMatrix,
    l: int = 0,
    return_diagram: bool = False,
):
    """Global forward map: triple (T, U, m) to the pair (P, Q).

    T is the zero-th row of the diagram ending at u, U the zero-th column
    ending at v; the stabilized bottom row and right column come back.
    """
    n = u.n
    if t_tab.inside != u_tab.inside:
        raise InvalidPair("inside(T) must equal inside(U)")
    if t_tab.outside != u or u_tab.outside != v:
        raise InvalidPair("tableau outsides must be u and v")
    nrows = max(len(u_tab.strips), m.nrows)
    ncols = max(len(t_tab.strips), m.ncols)
    rowsums = m.rowsums(nrows)
    wt_u = u_tab.weight() + (0,) * (nrows - len(u_tab.strips))
    if any(r >= n for r in rowsums):
        raise InputNotBounded(f"row sums {rowsums} must be < n = {n}")
    if any(a + b > n - 1 for a, b in zip(wt_u, rowsums)):
        raise WeightOverflow(f"wt(U) + rowsums = {tuple(a+b for a,b in zip(wt_u, rowsums))} exceeds n-1")

    g = GrowthDiagram(n, l, nrows, ncols)
    g.entries = dict(m.entries)
    top = _padded_strong(t_tab, ncols)
    left = _padded_weak(u_tab, nrows)
    g.vertices[(0, 0)] = t_tab.inside
    for j, s in enumerate(top, 1):
        g.hstrips[(0, j)] = s
        g.vertices[(0, j)] = s.outside
    for i, s in enumerate(left, 1):
        g.vstrips[(i, 0)] = s
        g.vertices[(i, 0)] = s.outside
    for i in range(1, nrows + 1):
        for j in range(1, ncols + 1):
            west = g.vstrips[(i, j - 1)]
            north = g.hstrips[(i - 1, j)]
            e = m.entries.get((i, j), 0)
            out, tags = phi_with_audit(InitialTriple(west, north, e), l)
            g.vstrips[(i, j)] = out.weak
            g.hstrips[(i, j)] = out.strong
            g.vertices[(i, j)] = out.weak.outside
            g.audits[(i, j)] = tags
    p_tab = g.row_tableau(nrows)
    q_tab = g.column_tableau(ncols)
    # weight bookkeeping of the theorem, rechecked on every run
    cols = m.colsums(ncols)
    wt_t = t_tab.weight() + (0,) * (ncols - len(t_tab.strips))
    assert _padded(p_tab.weight(), ncols) == tuple(a + b for a, b in zip(wt_t, cols))
    assert _padded(q_tab.weight(), nrows) == tuple(a + b for a, b in zip(wt_u, rowsums))
    if return_diagram:
        return p_tab, q_tab, g
    return p_tab, q_tab


def _padded(weight: tuple[int, ...], count: int) -> tuple[int, ...]:
    return weight + (0,) * (count - len(weight))


def affine_uninsert(
    p_tab: StrongTableau,
    q_tab: WeakTableau,
    l: int = 0,
    return_diagram: bool = False,
):
    """Global reverse map: pair (P, Q) back to the triple (T, U, m)."""
    if p_tab.outside != q_tab.outside:
        raise InvalidPair("P and Q must share their outside element")
    n = p_tab.outside.n
    nrows = len(q_tab.strips)
    ncols = len(p_tab.strips)
    g = GrowthDiagram(n, l, nrows, ncols)
    bottom = _padded_strong(p_tab, ncols)
    right = _padded_weak(q_tab, nrows)
    g.vertices[(nrows, 0)] = p_tab.inside
    for j, s in enumerate(bottom, 1):
        g.hstrips[(nrows, j)] = s
        g.vertices[(nrows, j)] = s.outside
    g.vertices[(0, ncols)] = q_tab.inside
    for i, s in enumerate(right, 1):
        g.vstrips[(i, ncols)] = s
        g.vertices[(i, ncols)] = s.outside
    if nrows and g.vertices[(nrows, ncols)] != q_tab.outside:
        raise InvalidPair("borders disagree at the southeast corner")
    for i in range(nrows, 0, -1):
        for j in range(ncols, 0, -1):
            south = g.hstrips[(i, j)]
            east = g.vstrips[(i, j)]
            try:
                triple, tags = psi_with_audit(FinalPair(east, south), l)
            except ValueError as exc:
                raise InvalidPair(f"cell ({i},{j}) is not reversible: {exc}") from exc
            g.vstrips[(i, j - 1)] = triple.weak
            g.hstrips[(i - 1, j)] = triple.strong
            g.vertices[(i - 1, j)] = triple.strong.outside
            g.vertices[(i, j - 1)] = triple.weak.outside
            g.vertices[(i - 1, j - 1)] = triple.weak.inside
            if triple.e:
                g.entries[(i, j)] = triple.e
            g.audits[(i, j)] = tags
    t_tab = (
        StrongTableau(g.vertices[(0, 0)], tuple(g.hstrips[(0, j)] for j in range(1, ncols + 1)))
        if ncols
        else StrongTableau(q_tab.inside, ())
    )
    u_tab = (
        WeakTableau(g.vertices[(0, 0)], tuple(g.vstrips[(i, 0)] for i in range(1, nrows + 1)))
        if nrows
        else WeakTableau(p_tab.inside, ())
    )
    m = BoundedMatrix(g.entries)
    if return_diagram:
        return t_tab, u_tab, m, g
    return t_tab, u_tab, m


def grassmannian_rsk(m: BoundedMatrix, n: int, l: int = 0, return_diagram: bool = False):
    """Affine insertion of a bare matrix: u = v = id, empty border tableaux."""
    e = identity(n)
    return affine_insert(e, e, StrongTableau(e, ()), WeakTableau(e, ()), m, l, return_diagram)


def classical_rsk(m: BoundedMatrix) -> tuple[list[list[int]], list[list[int]]]:
    """Textbook row-insertion RSK on the biword of m; the limit oracle.

    >>> classical_rsk(BoundedMatrix.from_rows([[0, 1], [1, 0]]))
    ([[1], [2]], [[1], [2]])
    """
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for (i, j), mult in sorted(m.entries.items()):
        for _ in range(mult):
            _row_insert(p_rows, q_rows, i, j)
    return p_rows, q_rows


def _row_insert(p_rows, q_rows, rec: int, val: int) -> None:
    r = 0
    while True:
        if r == len(p_rows):
            p_rows.append([val])
            q_rows.append([rec])
            return
        row = p_rows[r]
        for k, entry in enumerate(row):
            if entry > val:
                row[k], val = val, entry
                break
        else:
            row.append(val)
            q_rows[r].append(rec)
            return
        r += 1


def classical_unrsk(p_rows, q_rows) -> BoundedMatrix:
    """Inverse of classical_rsk, reading the recording tableau backwards."""
    p = [list(r) for r in p_rows]
    q = [list(r) for r in q_rows]
    # undo in reverse biword order: descending record, then rightmost cell
    cells = sorted(
        ((rec, r, c) for r, row in enumerate(q) for c, rec in enumerate(row)),
        key=lambda t: (t[0], t[2]),
    )
    entries: dict[tuple[int, int], int] = {}
    while cells:
        rec, r, c = cells.pop()
        assert c == len(q[r]) - 1
        q[r].pop()
        val = p[r].pop(c)
        for rr in range(r - 1, -1, -1):
            row = p[rr]
            k = max(idx for idx, entry in enumerate(row) if entry < val)
            row[k], val = val, row[k]
        entries[(rec, val)] = entries.get((rec, val), 0) + 1
    return BoundedMatrix(entries)

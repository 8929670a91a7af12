"""Parallelogram polyominoes as 0/1 tableaux, their bounce ribbons, labelled
variants and the (ribbon, surplus) decomposition.

A polyomino row is described by its leftmost and rightmost filled columns,
a column by its topmost and bottommost filled rows.  Every position is
1-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (AreaError, CornerError, LabelConventionError,
                     MonotonicityError, OverlapError, RowGapError,
                     SizeGuardError, SupportError)
from .grid import Grid01, Labelling, grid_from_function

#: default bound on ``m + n`` for polyomino enumeration
MAX_SEMIPERIMETER = 12


def row_spans(g: Grid01) -> list[tuple[int, int]]:
    """``(leftmost, rightmost)`` filled column per row; ``(0, 0)`` if empty."""
    out = []
    for row in g.rows:
        ones = [j for j, x in enumerate(row, 1) if x]
        out.append((ones[0], ones[-1]) if ones else (0, 0))
    return out


def col_spans(g: Grid01) -> list[tuple[int, int]]:
    """``(topmost, bottommost)`` filled row per column; ``(0, 0)`` if empty."""
    out = []
    for col in g.columns:
        ones = [i for i, x in enumerate(col, 1) if x]
        out.append((ones[0], ones[-1]) if ones else (0, 0))
    return out


def check_para(g: Grid01) -> None:
    if g[1, 1] != 1 or g[g.m, g.n] != 1:
        raise CornerError("cells (1,1) and (m,n) must both be filled")
    spans = row_spans(g)
    for i, (row, (lo, hi)) in enumerate(zip(g.rows, spans), 1):
        if lo == 0:
            raise RowGapError(i, "no filled cell")
        if not all(row[lo - 1:hi]):
            raise RowGapError(i, "filled cells are not contiguous")
    for i in range(1, g.m):
        (l1, r1), (l2, r2) = spans[i - 1], spans[i]
        if l2 < l1:
            raise MonotonicityError((i, i + 1), "leftmost 1 moves left")
        if r2 < r1:
            raise MonotonicityError((i, i + 1), "rightmost 1 moves left")
        if l2 > r1:
            raise OverlapError((i, i + 1))


@dataclass(frozen=True, eq=False)
class ParaPolyomino:
    grid: Grid01

    def __post_init__(self):
        check_para(self.grid)

    # ribbons and general polyominoes compare by content
    def __eq__(self, other):
        if not isinstance(other, ParaPolyomino):
            return NotImplemented
        return self.grid == other.grid

    def __hash__(self):
        return hash(self.grid)

    @property
    def m(self) -> int:
        return self.grid.m

    @property
    def n(self) -> int:
        return self.grid.n

    def leftmost(self) -> list[int]:
        return [lo for lo, _ in row_spans(self.grid)]

    def topmost(self) -> list[int]:
        return [lo for lo, _ in col_spans(self.grid)]

    @property
    def is_ribbon(self) -> bool:
        return self.grid.count_ones() == self.m + self.n - 1

    def __str__(self):
        return str(self.grid)


@dataclass(frozen=True, eq=False)
class RibbonPolyomino(ParaPolyomino):
    def __post_init__(self):
        super().__post_init__()
        area = self.grid.count_ones()
        if area != self.m + self.n - 1:
            raise AreaError(f"area {area} differs from m+n-1 = {self.m + self.n - 1}")


def validate_para(g: Grid01) -> ParaPolyomino:
    return ParaPolyomino(g)


def validate_ribbon(g: Grid01) -> RibbonPolyomino:
    return RibbonPolyomino(g)


def bounce(p: ParaPolyomino) -> RibbonPolyomino:
    """Trace right to the end of the current row, then down to the bottom of
    the current column, from (1,1) until (m,n)."""
    g = p.grid
    rows = row_spans(g)
    cols = col_spans(g)
    cells = {(1, 1)}
    i = j = 1
    while (i, j) != (g.m, g.n):
        right = rows[i - 1][1]
        if j < right:
            cells.update((i, y) for y in range(j + 1, right + 1))
            j = right
        down = cols[j - 1][1]
        cells.update((x, j) for x in range(i + 1, down + 1))
        i = down
    return RibbonPolyomino(grid_from_function(g.m, g.n, lambda x, y: (x, y) in cells))


# -- labelled polyominoes --------------------------------------------------------

def _check_groups(kind, keys, labels):
    """Within each run of equal ``keys``, labels must increase."""
    for k in range(1, len(keys)):
        if keys[k] == keys[k - 1] and labels[k] < labels[k - 1]:
            raise LabelConventionError(kind, (k, k + 1), (labels[k - 1], labels[k]))


def check_labels(p: ParaPolyomino, labels: Labelling) -> None:
    if (labels.m, labels.n) != (p.m, p.n):
        raise LabelConventionError("labelling", (labels.m, labels.n), (p.m, p.n))
    if labels.row_labels[0] != 0:
        raise LabelConventionError("rows", (1,), (labels.row_labels[0],))
    # Leftmost columns and topmost rows are monotone, so equal values are
    # always adjacent.
    _check_groups("rows", p.leftmost(), labels.row_labels)
    _check_groups("columns", p.topmost(), labels.col_labels)


@dataclass(frozen=True, eq=False)
class LabelledPara:
    poly: ParaPolyomino
    labels: Labelling

    def __post_init__(self):
        check_labels(self.poly, self.labels)

    def __eq__(self, other):
        if not isinstance(other, LabelledPara):
            return NotImplemented
        return self.grid == other.grid and self.labels == other.labels

    def __hash__(self):
        return hash((self.grid, self.labels))

    @property
    def grid(self) -> Grid01:
        return self.poly.grid

    @property
    def m(self) -> int:
        return self.poly.m

    @property
    def n(self) -> int:
        return self.poly.n


@dataclass(frozen=True, eq=False)
class LabelledRibbon(LabelledPara):
    poly: RibbonPolyomino

    def __post_init__(self):
        if not isinstance(self.poly, RibbonPolyomino):
            object.__setattr__(self, "poly", RibbonPolyomino(self.poly.grid))
        super().__post_init__()


def validate_lpara(g: Grid01, labels: Labelling) -> LabelledPara:
    return LabelledPara(ParaPolyomino(g), labels)


def validate_lrib(g: Grid01, labels: Labelling) -> LabelledRibbon:
    return LabelledRibbon(RibbonPolyomino(g), labels)


# -- surplus decomposition ---------------------------------------------------------

def _runs(keys: Sequence[int]) -> list[range]:
    """0-based index ranges of maximal runs of equal keys."""
    out, start = [], 0
    for k in range(1, len(keys) + 1):
        if k == len(keys) or keys[k] != keys[start]:
            out.append(range(start, k))
            start = k
    return out


def decompose(d: LabelledPara) -> tuple[LabelledRibbon, tuple[int, ...]]:
    """Split ``d`` into its labelled bounce ribbon and surplus vector.

    The ribbon keeps every row and column in place; within each run of ribbon
    rows sharing a leftmost column (columns sharing a topmost row) the labels
    found there are re-sorted ascending.  ``surplus[k - 1]`` is how far the
    line labelled ``v_k`` reaches beyond the ribbon: leftwards for rows,
    upwards for columns.
    """
    m, n = d.m, d.n
    rib = bounce(d.poly)
    rib_left, rib_top = rib.leftmost(), rib.topmost()
    row_labels = list(d.labels.row_labels)
    col_labels = list(d.labels.col_labels)
    for run in _runs(rib_left):
        row_labels[run.start:run.stop] = sorted(row_labels[run.start:run.stop])
    for run in _runs(rib_top):
        col_labels[run.start:run.stop] = sorted(col_labels[run.start:run.stop])
    ribbon = LabelledRibbon(rib, Labelling(tuple(row_labels), tuple(col_labels)))

    left, top = d.poly.leftmost(), d.poly.topmost()
    surplus = [0] * (m + n - 1)
    for x, lab in enumerate(d.labels.row_labels):
        if lab:
            surplus[lab - 1] = rib_left[row_labels.index(lab)] - left[x]
    for y, lab in enumerate(d.labels.col_labels):
        surplus[lab - 1] = rib_top[col_labels.index(lab)] - top[y]
    return ribbon, tuple(surplus)


def fill_from_boundary(m: int, n: int, left: Sequence[int], top: Sequence[int]) -> Grid01:
    """Cell ``(x, y)`` is filled iff ``top[y] <= x`` and ``left[x] <= y``."""
    return grid_from_function(m, n, lambda x, y: top[y - 1] <= x and left[x - 1] <= y)


def expand(d: LabelledRibbon, surplus: Sequence[int]) -> LabelledPara:
    """Grow a labelled ribbon by ``surplus`` cells per line (see :func:`decompose`).

    Raises :class:`SupportError` when the result is not a labelled
    parallelogram polyomino with ``d`` as its labelled bounce ribbon.
    """
    m, n = d.m, d.n
    surplus = tuple(int(z) for z in surplus)
    if len(surplus) != m + n - 1:
        raise SupportError(f"surplus has {len(surplus)} entries, expected {m + n - 1}")
    if any(z < 0 for z in surplus):
        raise SupportError("surplus entries must be non-negative")

    def zeta(label):
        return surplus[label - 1] if label else 0

    rib_left, rib_top = d.poly.leftmost(), d.poly.topmost()
    rows = [(lab, rib_left[x] - zeta(lab)) for x, lab in enumerate(d.labels.row_labels)]
    cols = [(lab, rib_top[y] - zeta(lab)) for y, lab in enumerate(d.labels.col_labels)]
    for run in _runs(rib_left):
        rows[run.start:run.stop] = sorted(rows[run.start:run.stop],
                                          key=lambda r: (-zeta(r[0]), r[0]))
    for run in _runs(rib_top):
        cols[run.start:run.stop] = sorted(cols[run.start:run.stop],
                                          key=lambda c: (-zeta(c[0]), c[0]))
    left = [lo for _, lo in rows]
    top = [lo for _, lo in cols]
    if min(left) < 1 or min(top) < 1:
        raise SupportError("surplus pushes a boundary outside the grid")
    labels = Labelling(tuple(lab for lab, _ in rows), tuple(lab for lab, _ in cols))
    try:
        out = LabelledPara(ParaPolyomino(fill_from_boundary(m, n, left, top)), labels)
    except (RowGapError, CornerError, MonotonicityError, OverlapError,
            LabelConventionError) as exc:
        raise SupportError(f"surplus does not support the ribbon: {exc}") from None
    back, back_surplus = decompose(out)
    if back.grid != d.grid or back.labels != d.labels or back_surplus != surplus:
        raise SupportError("surplus changes the bounce ribbon")
    return out


# -- enumeration -----------------------------------------------------------------

def _guard(m, n, max_size):
    if m < 1 or n < 1:
        raise ValueError(f"dimensions must be positive, got {m}x{n}")
    if m + n > max_size:
        raise SizeGuardError(f"m+n = {m + n} exceeds the enumeration guard {max_size}")


def _spans(m, n):
    """All row-span sequences of parallelogram polyominoes."""
    def extend(prefix):
        if len(prefix) == m:
            if prefix[-1][1] == n:
                yield list(prefix)
            return
        lo, hi = prefix[-1]
        for l2 in range(lo, hi + 1):
            for r2 in range(hi, n + 1):
                yield from extend(prefix + [(l2, r2)])

    for r1 in range(1, n + 1):
        yield from extend([(1, r1)])


def enumerate_para(m: int, n: int, max_size: int = MAX_SEMIPERIMETER) -> Iterator[ParaPolyomino]:
    """All parallelogram polyominoes, ordered lexicographically by their rows."""
    _guard(m, n, max_size)
    grids = [grid_from_function(m, n, lambda x, y, s=s: s[x - 1][0] <= y <= s[x - 1][1])
             for s in _spans(m, n)]
    for g in sorted(grids, key=Grid01.to_strings):
        yield ParaPolyomino(g)


def enumerate_rib(m: int, n: int, max_size: int = MAX_SEMIPERIMETER) -> Iterator[RibbonPolyomino]:
    for p in enumerate_para(m, n, max_size):
        if p.is_ribbon:
            yield RibbonPolyomino(p.grid)


def _group_labellings(keys, pool):
    """Every assignment of ``pool`` to positions such that labels increase
    within runs of equal ``keys``; sorted lexicographically."""
    runs = _runs(keys)
    out = []

    def place(k, remaining, acc):
        if k == len(runs):
            out.append(tuple(acc))
            return
        for chosen in itertools.combinations(remaining, len(runs[k])):
            rest = [x for x in remaining if x not in chosen]
            place(k + 1, rest, acc + list(chosen))

    place(0, sorted(pool), [])
    return sorted(out)


def labellings(p: ParaPolyomino) -> list[Labelling]:
    """All labellings of ``p`` obeying the labelled-polyomino conventions."""
    m, n = p.m, p.n
    left = p.leftmost()
    # the top row is pinned to v_0; its run-mates still need labels above 0
    first = _runs(left)[0]
    row_sets = [(0,) + rest for rest in
                _group_labellings([-1] * (len(first) - 1) + left[first.stop:],
                                  range(1, m))]
    col_sets = _group_labellings(p.topmost(), range(m, m + n))
    return [Labelling(r, c) for r in sorted(row_sets) for c in col_sets]


def enumerate_lpara(m: int, n: int, max_size: int = MAX_SEMIPERIMETER) -> Iterator[LabelledPara]:
    for p in enumerate_para(m, n, max_size):
        cls = LabelledRibbon if p.is_ribbon else LabelledPara
        poly = RibbonPolyomino(p.grid) if p.is_ribbon else p
        for labels in labellings(p):
            yield cls(poly, labels)


def enumerate_lrib(m: int, n: int, max_size: int = MAX_SEMIPERIMETER) -> Iterator[LabelledRibbon]:
    for p in enumerate_rib(m, n, max_size):
        for labels in labellings(p):
            yield LabelledRibbon(p, labels)

"""Rectangular EW-tableaux, cornersupport entries and marked tableaux.

An ``m x n`` EW-tableau has an all-ones top row, a 0 somewhere in every
other row, and no 2x2 sub-square with 0s on one diagonal and 1s on the
other.  Rows are labelled ``0..m-1`` from the top and columns ``m..m+n-1``
from the left.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .errors import (AllOnesRowError, DecorationRangeError, LengthError,
                     MarkPlacementError, RectanglePatternError, SizeGuardError,
                     TopRowError)
from .grid import Grid01, Labelling

#: default bound on ``(m - 1) * n`` for exhaustive enumeration
MAX_FREE_CELLS = 24

Mask = tuple[tuple[bool, ...], ...]


def _row_bits(row) -> int:
    v = 0
    for x in row:
        v = (v << 1) | x
    return v


def _comparable(a: int, b: int) -> bool:
    return a & b == a or a & b == b


def _rectangle_witness(g: Grid01):
    """First (rows, cols) pair, in lexicographic order, spanning the forbidden
    pattern, or ``None``."""
    rows = g.rows
    for i1, i2 in itertools.combinations(range(g.m), 2):
        r1, r2 = rows[i1], rows[i2]
        if r1 == r2:
            continue
        for j1, j2 in itertools.combinations(range(g.n), 2):
            if r1[j1] == r2[j2] != r1[j2] == r2[j1]:
                return (i1 + 1, i2 + 1), (j1 + 1, j2 + 1)
    return None


def check_ew(g: Grid01) -> None:
    top = g.rows[0]
    for j, x in enumerate(top, 1):
        if not x:
            raise TopRowError(j)
    for i, row in enumerate(g.rows[1:], 2):
        if all(row):
            raise AllOnesRowError(i)
    # Clause (iii) holds iff the rows' 1-sets form a chain under inclusion.
    bits = [_row_bits(r) for r in g.rows]
    for a, b in itertools.combinations(bits, 2):
        if not _comparable(a, b):
            rows, cols = _rectangle_witness(g)
            raise RectanglePatternError(rows, cols)


@dataclass(frozen=True)
class EWTableau:
    grid: Grid01

    def __post_init__(self):
        check_ew(self.grid)

    @property
    def m(self) -> int:
        return self.grid.m

    @property
    def n(self) -> int:
        return self.grid.n

    def __getitem__(self, pos):
        return self.grid[pos]

    def __str__(self):
        return str(self.grid)


def validate_ew(g: Grid01) -> EWTableau:
    return EWTableau(g)


# -- cornersupport -------------------------------------------------------------

def is_cornersupport(t: EWTableau, i: int, j: int) -> bool:
    """Whether the entry at ``(i, j)`` is a cornersupport entry.

    Direct use of the definition: look for a cell ``(i2, j2)`` in another row
    and column holding the opposite bit while ``(i2, j)`` and ``(i, j2)`` both
    hold the same bit as ``(i, j)``.
    """
    g = t.grid
    x = g[i, j]
    rows = g.rows
    same_rows = [k for k in range(g.m) if k != i - 1 and rows[k][j - 1] == x]
    same_cols = [k for k in range(g.n) if k != j - 1 and rows[i - 1][k] == x]
    return any(rows[a][b] != x for a in same_rows for b in same_cols)


def cornersupport_mask_bruteforce(t: EWTableau) -> Mask:
    return tuple(tuple(is_cornersupport(t, i, j) for j in range(1, t.n + 1))
                 for i in range(1, t.m + 1))


def staircase_order(t: EWTableau) -> tuple[list[int], list[int]]:
    """0-based row and column orders that bring ``t`` to staircase form.

    Columns go by ascending number of 1s, rows by descending number of 1s;
    because the 1-sets are nested, equal counts mean identical lines, and
    those keep their original (label) order.
    """
    g = t.grid
    col_order = sorted(range(g.n), key=lambda j: (sum(g.column(j + 1)), j))
    row_order = sorted(range(g.m), key=lambda i: (-sum(g.rows[i]), i))
    return row_order, col_order


def sort_to_staircase(t: EWTableau) -> tuple[Grid01, Labelling]:
    row_order, col_order = staircase_order(t)
    labels = Labelling(tuple(row_order), tuple(t.m + j for j in col_order))
    return t.grid.permuted(row_order, col_order), labels


def cornersupport_mask_fast(t: EWTableau) -> Mask:
    """Cornersupport mask read off the staircase form.

    In staircase form row ``i`` holds 1s exactly in columns ``start[i]..n``
    and column ``j`` holds 1s exactly in rows ``1..depth[j]``.  A 1 at
    ``(i, j)`` is non-cornersupport iff row ``depth[j]`` starts where row
    ``i`` does; a 0 at ``(i, j)`` is non-cornersupport iff row
    ``depth[j] + 1`` starts where row ``i`` does.  Cornersupport status is
    unchanged by permuting rows and columns, so the answer is carried back
    through the sorting permutations.
    """
    m, n = t.m, t.n
    row_order, col_order = staircase_order(t)
    sc = t.grid.permuted(row_order, col_order)
    start = [0] + [n - sum(r) + 1 for r in sc.rows]
    depth = [0] + [sum(c) for c in sc.columns]
    out = [[False] * n for _ in range(m)]
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            if sc.rows[i - 1][j - 1]:
                support = start[depth[j]] != start[i]
            else:
                support = start[depth[j] + 1] != start[i]
            out[row_order[i - 1]][col_order[j - 1]] = support
    return tuple(tuple(r) for r in out)


def eta(t: EWTableau, mask: Optional[Mask] = None) -> tuple[int, ...]:
    """Counts of markable entries, indexed by label ``1..m+n-1``: non-cornersupport
    0s in each row below the top, then non-cornersupport 1s in each column."""
    if mask is None:
        mask = cornersupport_mask_fast(t)
    g = t.grid
    rows = [sum(1 for j in range(g.n) if g.rows[i][j] == 0 and not mask[i][j])
            for i in range(1, g.m)]
    cols = [sum(1 for i in range(g.m) if g.rows[i][j] == 1 and not mask[i][j])
            for j in range(g.n)]
    return tuple(rows + cols)


def mask_to_text(mask: Mask) -> str:
    """Grid text format with ``c`` (cornersupport) / ``n`` (non-cornersupport)."""
    lines = [f"grid: {len(mask)} {len(mask[0])}"]
    lines += ["".join("c" if x else "n" for x in row) for row in mask]
    return "\n".join(lines) + "\n"


# -- marked tableaux -----------------------------------------------------------

@dataclass(frozen=True)
class MarkedEWTableau:
    """EW-tableau with decoration ``a``; ``a[k - 1]`` belongs to label ``v_k``."""

    tableau: EWTableau
    a: tuple[int, ...]
    eta: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        want = self.tableau.m + self.tableau.n - 1
        if len(a) != want:
            raise LengthError(f"decoration has {len(a)} entries, expected {want}")
        bounds = eta(self.tableau)
        for k, (x, e) in enumerate(zip(a, bounds), 1):
            if not 0 <= x < e:
                raise DecorationRangeError(k, x, e)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "eta", bounds)

    @property
    def m(self) -> int:
        return self.tableau.m

    @property
    def n(self) -> int:
        return self.tableau.n


def validate_marked(t: EWTableau, a: Sequence[int]) -> MarkedEWTableau:
    return MarkedEWTableau(t, tuple(a))


def markable_cells(t: EWTableau, mask: Optional[Mask] = None) -> dict[int, list[tuple[int, int]]]:
    """For every label ``k >= 1``, the non-cornersupport cells of the right bit
    in that line, in reading order (left to right / top to bottom)."""
    if mask is None:
        mask = cornersupport_mask_fast(t)
    g = t.grid
    out = {}
    for i in range(2, g.m + 1):
        out[i - 1] = [(i, j) for j in range(1, g.n + 1)
                      if g[i, j] == 0 and not mask[i - 1][j - 1]]
    for j in range(1, g.n + 1):
        out[g.m + j - 1] = [(i, j) for i in range(1, g.m + 1)
                            if g[i, j] == 1 and not mask[i - 1][j - 1]]
    return out


def marks_from_decoration(mt: MarkedEWTableau) -> frozenset[tuple[int, int]]:
    cells = markable_cells(mt.tableau)
    return frozenset(cells[k][x] for k, x in enumerate(mt.a, 1))


def decoration_from_marks(t: EWTableau, marks) -> tuple[int, ...]:
    mask = cornersupport_mask_fast(t)
    g = t.grid
    by_line = {}
    for i, j in sorted(marks):
        if not (1 <= i <= g.m and 1 <= j <= g.n):
            raise MarkPlacementError(f"mark {(i, j)} outside the grid")
        if mask[i - 1][j - 1]:
            raise MarkPlacementError(f"mark {(i, j)} sits on a cornersupport entry")
        label = i - 1 if g[i, j] == 0 else g.m + j - 1
        if label in by_line:
            raise MarkPlacementError(
                f"line v{label} carries marks at {by_line[label]} and {(i, j)}")
        by_line[label] = (i, j)
    cells = markable_cells(t, mask)
    a = []
    for k in range(1, g.m + g.n):
        if k not in by_line:
            raise MarkPlacementError(f"line v{k} has no mark")
        a.append(cells[k].index(by_line[k]))
    return tuple(a)


# -- enumeration ---------------------------------------------------------------

def _guard(m, n, max_cells):
    if m < 1 or n < 1:
        raise ValueError(f"dimensions must be positive, got {m}x{n}")
    if (m - 1) * n > max_cells:
        raise SizeGuardError(
            f"(m-1)*n = {(m - 1) * n} exceeds the enumeration guard {max_cells}")


def enumerate_ew(m: int, n: int, max_cells: int = MAX_FREE_CELLS) -> Iterator[EWTableau]:
    """All ``m x n`` EW-tableaux, ordered lexicographically by their rows."""
    _guard(m, n, max_cells)
    full = (1 << n) - 1
    to_row = [tuple((r >> (n - 1 - j)) & 1 for j in range(n)) for r in range(full + 1)]

    def extend(prefix):
        if len(prefix) == m:
            yield EWTableau(Grid01(tuple(to_row[r] for r in prefix)))
            return
        for r in range(full):
            if all(_comparable(r, p) for p in prefix):
                yield from extend(prefix + [r])

    yield from extend([full])


def enumerate_mew(m: int, n: int, max_cells: int = MAX_FREE_CELLS) -> Iterator[MarkedEWTableau]:
    for t in enumerate_ew(m, n, max_cells):
        for a in itertools.product(*(range(e) for e in eta(t))):
            yield MarkedEWTableau(t, a)


def random_ew(m: int, n: int, rng: Optional[random.Random] = None) -> EWTableau:
    """Uniformly random staircase shape, then random row (below the top) and
    column shuffles.  Every EW-tableau has positive probability."""
    rng = rng or random.Random()
    starts = sorted(rng.randint(2, n + 1) for _ in range(m - 1))
    rows = [[1] * n] + [[1 if j >= s else 0 for j in range(1, n + 1)] for s in starts]
    lower = rows[1:]
    rng.shuffle(lower)
    cols = list(range(n))
    rng.shuffle(cols)
    rows = [rows[0]] + lower
    return EWTableau(Grid01(tuple(tuple(r[j] for j in cols) for r in rows)))

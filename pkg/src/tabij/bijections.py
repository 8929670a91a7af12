"""Maps between EW-tableaux and labelled polyominoes.

``phi``/``psi`` pair rectangular EW-tableaux with labelled ribbons.
``big_phi_zeta`` and ``big_phi_direct`` are two constructions of the lifted
map from marked EW-tableaux to labelled parallelogram polyominoes, and
``big_phi_inverse`` undoes it.
"""

from __future__ import annotations

from .errors import ConsistencyError, DecorationRangeError, SupportError
from .ew import (EWTableau, MarkedEWTableau, cornersupport_mask_fast, eta,
                 marks_from_decoration, sort_to_staircase)
from .grid import Grid01, Labelling, grid_from_function
from .polyomino import (LabelledPara, LabelledRibbon, ParaPolyomino,
                        RibbonPolyomino, decompose, expand, fill_from_boundary)


def ribbon_from_staircase(sc: Grid01) -> Grid01:
    """Trace the 0/1 boundary of a staircase: the lowest 1 of each column, and
    each 0 that has a 1 (or the right edge) immediately to its right."""
    m, n = sc.m, sc.n

    def cell(i, j):
        if sc[i, j]:
            return i == m or sc[i + 1, j] == 0
        return j == n or sc[i, j + 1] == 1

    return grid_from_function(m, n, cell)


def staircase_from_ribbon(r: Grid01) -> Grid01:
    """Inverse of :func:`ribbon_from_staircase`: fill everything strictly to
    the right of a ribbon cell, plus the corner (1,1)."""
    def cell(i, j):
        return (i, j) == (1, 1) or any(r[i, k] for k in range(1, j))

    return grid_from_function(r.m, r.n, cell)


def phi(t: EWTableau) -> LabelledRibbon:
    sc, labels = sort_to_staircase(t)
    return LabelledRibbon(RibbonPolyomino(ribbon_from_staircase(sc)), labels)


def psi(d: LabelledRibbon) -> EWTableau:
    sc = staircase_from_ribbon(d.grid)
    m = d.m
    rows = [d.labels.row_of(k) - 1 for k in range(m)]
    cols = [d.labels.col_of(m + k) - 1 for k in range(d.n)]
    return EWTableau(sc.permuted(rows, cols))


def zeta(mt: MarkedEWTableau) -> tuple[int, ...]:
    return tuple(e - x - 1 for e, x in zip(mt.eta, mt.a))


def big_phi_zeta(mt: MarkedEWTableau) -> LabelledPara:
    """Expand ``phi(T)`` by ``eta(T) - a - 1`` cells per line."""
    try:
        return expand(phi(mt.tableau), zeta(mt))
    except SupportError as exc:
        raise ConsistencyError(f"marked tableau does not expand cleanly: {exc}") from exc


def h_statistics(mt: MarkedEWTableau) -> tuple[int, ...]:
    """``h[k - 1]`` for label ``v_k``: cornersupport entries of the marked bit in
    that line, plus markable ones up to and including the mark."""
    t = mt.tableau
    g = t.grid
    mask = cornersupport_mask_fast(t)
    marks = marks_from_decoration(mt)
    h = []
    for i in range(2, g.m + 1):
        (mark,) = [j for (x, j) in marks if x == i and g[x, j] == 0]
        support = sum(1 for j in range(1, g.n + 1) if g[i, j] == 0 and mask[i - 1][j - 1])
        free = sum(1 for j in range(1, mark + 1) if g[i, j] == 0 and not mask[i - 1][j - 1])
        h.append(support + free)
    for j in range(1, g.n + 1):
        (mark,) = [x for (x, y) in marks if y == j and g[x, y] == 1]
        support = sum(1 for i in range(1, g.m + 1) if g[i, j] == 1 and mask[i - 1][j - 1])
        free = sum(1 for i in range(1, mark + 1) if g[i, j] == 1 and not mask[i - 1][j - 1])
        h.append(support + free)
    return tuple(h)


def stable_order(values) -> tuple[int, ...]:
    """Lexicographically smallest 1-based permutation sorting ``values`` weakly
    increasing."""
    return tuple(k + 1 for k in sorted(range(len(values)), key=lambda k: values[k]))


def big_phi_direct(mt: MarkedEWTableau) -> LabelledPara:
    """Place each line's boundary cell straight from its h statistic."""
    m, n = mt.m, mt.n
    h = h_statistics(mt)
    pi = stable_order(h[:m - 1])
    sigma = stable_order(h[m - 1:])
    row_labels = (0,) + pi
    col_labels = tuple(m - 1 + s for s in sigma)
    left = [1] + [h[k - 1] for k in pi]
    top = [h[m - 1 + s - 1] for s in sigma]
    grid = fill_from_boundary(m, n, left, top)
    return LabelledPara(ParaPolyomino(grid), Labelling(row_labels, col_labels))


def big_phi_inverse(d: LabelledPara) -> MarkedEWTableau:
    ribbon, surplus = decompose(d)
    t = psi(ribbon)
    a = tuple(e - z - 1 for e, z in zip(eta(t), surplus))
    try:
        return MarkedEWTableau(t, a)
    except DecorationRangeError as exc:
        raise ConsistencyError(f"surplus exceeds what the tableau can absorb: {exc}") from exc


def phi_as_marked(t: EWTableau) -> MarkedEWTableau:
    """The marking under which ``big_phi`` reduces to ``phi``: the last
    markable entry of every line."""
    return MarkedEWTableau(t, tuple(e - 1 for e in eta(t)))

import itertools
from math import comb

import pytest
from hypothesis import given, settings

from tabij import (Grid01, Labelling, LabelledPara, ParaPolyomino, big_phi_zeta,
                   bounce, decompose, enumerate_lpara, enumerate_lrib,
                   enumerate_para, enumerate_rib, expand, validate_lpara,
                   validate_lrib, validate_para, validate_ribbon)
from tabij import fixtures as fx
from tabij.errors import (AreaError, CornerError, LabelConventionError,
                          MonotonicityError, OverlapError, RowGapError,
                          SizeGuardError, SupportError)

from .conftest import marked_tableaux


def is_para_by_paths(rows):
    """Independent oracle: cells between two monotone lattice paths that only
    meet at the ends, i.e. edge-connected, row- and column-convex, with
    weakly increasing row starts and ends."""
    m, n = len(rows), len(rows[0])
    cells = {(i, j) for i in range(m) for j in range(n) if rows[i][j]}
    if (0, 0) not in cells or (m - 1, n - 1) not in cells:
        return False
    seen, todo = set(), [(0, 0)]
    while todo:
        c = todo.pop()
        if c in seen:
            continue
        seen.add(c)
        i, j = c
        todo += [d for d in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)) if d in cells]
    if seen != cells:
        return False
    starts, ends = [], []
    for i in range(m):
        js = [j for j in range(n) if rows[i][j]]
        if not js or js != list(range(js[0], js[-1] + 1)):
            return False
        starts.append(js[0])
        ends.append(js[-1])
    return starts == sorted(starts) and ends == sorted(ends)


def labelled_by_definition(rows, row_labels, col_labels):
    m, n = len(rows), len(rows[0])
    if row_labels[0] != 0:
        return False
    left = [min(j for j in range(n) if rows[i][j]) for i in range(m)]
    top = [min(i for i in range(m) if rows[i][j]) for j in range(n)]
    for a, b in itertools.combinations(range(m), 2):
        if left[a] == left[b] and row_labels[a] > row_labels[b]:
            return False
    for a, b in itertools.combinations(range(n), 2):
        if top[a] == top[b] and col_labels[a] > col_labels[b]:
            return False
    return True


def brute_para(m, n):
    out = []
    for bits in itertools.product((0, 1), repeat=m * n):
        rows = tuple(tuple(bits[k * n:(k + 1) * n]) for k in range(m))
        if is_para_by_paths(rows):
            out.append(rows)
    return out


# -- validation ------------------------------------------------------------------

def test_known_members():
    assert not validate_para(Grid01.parse(fx.PARA_6x4)).is_ribbon
    assert validate_ribbon(Grid01.parse(fx.RIB_6x4)).is_ribbon
    with pytest.raises(AreaError):
        validate_ribbon(Grid01.parse(fx.PARA_6x4))


@pytest.mark.parametrize("shape, exc", [
    ("10/01", OverlapError),
    ("01/11", CornerError),
    ("11/10", CornerError),
    ("101/111", RowGapError),
    ("110/000/011", RowGapError),
    ("011/111", CornerError),
    ("111/010/011", MonotonicityError),
    ("110/011/111", MonotonicityError),
    ("110/111/011", None),
    ("111/011/001", None),
])
def test_para_validation(shape, exc):
    g = Grid01.parse(shape)
    assert is_para_by_paths(g.rows) is (exc is None)
    if exc is None:
        validate_para(g)
        return
    with pytest.raises(exc):
        validate_para(g)


def test_overlap_rows_reported():
    with pytest.raises(OverlapError) as e:
        validate_para(Grid01.parse("10/01"))
    assert e.value.rows == (1, 2)


@pytest.mark.parametrize("m, n", [(m, n) for m in range(1, 5) for n in range(1, 5)])
def test_enumerate_para_matches_oracle(m, n):
    expected = sorted(brute_para(m, n), key=lambda r: [list(x) for x in r])
    assert [p.grid.rows for p in enumerate_para(m, n)] == expected


@pytest.mark.parametrize("m, n", [(1, 1), (2, 3), (3, 2), (3, 3), (4, 4)])
def test_ribbon_count_is_path_count(m, n):
    assert len(list(enumerate_rib(m, n))) == comb(m + n - 2, m - 1)


def test_rib_3x2():
    assert len(list(enumerate_rib(3, 2))) == 3


def test_guard():
    with pytest.raises(SizeGuardError):
        next(enumerate_para(7, 6))


# -- bounce ------------------------------------------------------------------------

def test_bounce_worked():
    assert bounce(validate_para(Grid01.parse(fx.PARA_6x4))).grid == Grid01.parse(fx.BOUNCE_6x4)


def test_bounce_single_row():
    p = validate_para(Grid01.parse("11111"))
    assert bounce(p).grid == p.grid


@pytest.mark.parametrize("m, n", [(m, n) for m in range(1, 5) for n in range(1, 5)])
def test_bounce_properties(m, n):
    for p in enumerate_para(m, n):
        r = bounce(p)
        assert r.grid.count_ones() == m + n - 1
        assert all(p.grid.rows[i][j] >= r.grid.rows[i][j] for i in range(m) for j in range(n))
        assert bounce(r) == r
        if p.is_ribbon:
            assert r == p


# -- labelled polyominoes ----------------------------------------------------------

def test_labelled_conventions():
    d = validate_lpara(Grid01.parse(fx.PARA_6x4), Labelling(fx.SURPLUS_ROWS, fx.SURPLUS_COLS))
    assert d.labels.row_labels[0] == 0
    with pytest.raises(LabelConventionError):
        validate_lpara(Grid01.parse(fx.PARA_6x4), Labelling((0, 1, 5, 3, 2, 4), (7, 9, 8, 6)))
    with pytest.raises(LabelConventionError):
        validate_lrib(Grid01.parse(fx.RIB_6x4), Labelling((0, 2, 4, 5, 3, 1), (6, 8, 7, 9)))
    with pytest.raises(LabelConventionError):
        validate_lpara(Grid01.parse("11/01"), Labelling((1, 0), (2, 3)))


def test_decreasing_labels_in_a_run_rejected():
    # rows 3 and 4 of the first and rows 5 and 6 of the second share a leftmost
    # column but carry decreasing labels
    with pytest.raises(LabelConventionError) as e:
        validate_lpara(Grid01.parse(fx.PARA_6x4), Labelling((0, 1, 5, 3, 2, 4), (7, 9, 8, 6)))
    assert e.value.positions == (3, 4)
    with pytest.raises(LabelConventionError) as e:
        validate_lrib(Grid01.parse(fx.RIB_6x4), Labelling((0, 2, 4, 5, 3, 1), (6, 8, 7, 9)))
    assert e.value.positions == (5, 6)


@pytest.mark.parametrize("m, n", [(1, 2), (2, 2), (3, 2), (2, 3), (3, 3)])
def test_enumerate_lpara_matches_definition(m, n):
    expected = set()
    for rows in brute_para(m, n):
        for r in itertools.permutations(range(m)):
            for c in itertools.permutations(range(m, m + n)):
                if labelled_by_definition(rows, r, c):
                    expected.add((rows, r, c))
    got = [(d.grid.rows, d.labels.row_labels, d.labels.col_labels)
           for d in enumerate_lpara(m, n)]
    assert len(got) == len(set(got))
    assert set(got) == expected


def test_labelled_counts():
    assert len(list(enumerate_lrib(3, 2))) == 7
    assert len(list(enumerate_lpara(3, 2))) == 12


@pytest.mark.parametrize("m, n", [(2, 2), (3, 2), (3, 3), (4, 3), (4, 4)])
def test_lpara_count_is_tree_count(m, n):
    # spanning trees of the complete bipartite graph
    assert len(list(enumerate_lpara(m, n))) == m ** (n - 1) * n ** (m - 1)


# -- decompose / expand ------------------------------------------------------------

def test_surplus_worked():
    d = validate_lpara(Grid01.parse(fx.PARA_6x4), Labelling(fx.SURPLUS_ROWS, fx.SURPLUS_COLS))
    rib, z = decompose(d)
    assert z == fx.SURPLUS
    assert rib.grid == Grid01.parse(fx.BOUNCE_6x4)
    assert rib.labels == Labelling(fx.SURPLUS_RIBBON_ROWS, fx.SURPLUS_RIBBON_COLS)
    assert expand(rib, z) == d


def test_expand_worked():
    rib = validate_lrib(Grid01.parse(fx.BIG_RIBBON), Labelling(fx.BIG_ROWS, fx.BIG_COLS))
    out = expand(rib, fx.MARKED_A2_ZETA)
    assert out.grid == Grid01.parse(fx.MARKED_A2_IMAGE)
    assert out.labels == Labelling(fx.MARKED_A2_IMAGE_ROWS, fx.MARKED_A2_IMAGE_COLS)


def test_expand_zero_and_ribbons():
    for d in enumerate_lrib(3, 3):
        assert expand(d, (0,) * 5) == d
        assert decompose(d) == (d, (0,) * 5)


def test_expand_off_grid():
    rib = validate_lrib(Grid01.parse(fx.BIG_RIBBON), Labelling(fx.BIG_ROWS, fx.BIG_COLS))
    for k in range(19):
        z = [0] * 19
        z[k] = 7 + 13
        with pytest.raises(SupportError):
            expand(rib, z)
    with pytest.raises(SupportError):
        expand(rib, (0,) * 18)
    with pytest.raises(SupportError):
        expand(rib, (-1,) + (0,) * 18)


def test_expand_rejects_bounce_change():
    # growing the lone column above the corner step would move the bounce path
    rib = validate_lrib(Grid01.parse("10/11"), Labelling((0, 1), (2, 3)))
    with pytest.raises(SupportError):
        expand(rib, (0, 0, 1))


@pytest.mark.parametrize("m, n", [(m, n) for m in range(1, 4) for n in range(1, 4)])
def test_decompose_expand_inverse(m, n):
    ribbons = list(enumerate_lrib(m, n))
    for d in enumerate_lpara(m, n):
        rib, z = decompose(d)
        assert rib in ribbons
        assert all(x >= 0 for x in z)
        assert expand(rib, z) == d


@pytest.mark.parametrize("m, n", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_expand_uniqueness_and_support(m, n):
    """Every supported (ribbon, surplus) pair lands on a distinct polyomino and
    keeps its ribbon; every polyomino is reached."""
    lpara = set(enumerate_lpara(m, n))
    seen = {}
    for rib in enumerate_lrib(m, n):
        for z in itertools.product(range(m + n), repeat=m + n - 1):
            try:
                out = expand(rib, z)
            except SupportError:
                continue
            assert bounce(out.poly) == rib.poly
            assert out not in seen, (out, seen.get(out), (rib, z))
            seen[out] = (rib, z)
    assert set(seen) == lpara


@settings(max_examples=100, deadline=None)
@given(marked_tableaux())
def test_decompose_expand_random(mt):
    d = big_phi_zeta(mt)
    rib, z = decompose(d)
    assert expand(rib, z) == d
    left = d.poly.leftmost()
    assert left == sorted(left)

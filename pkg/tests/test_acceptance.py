"""The ten acceptance criteria, one test each, timed against their budgets.

A PASS/FAIL line per criterion is printed in the terminal summary."""

import itertools
import random

from tabij import (EWTableau, Grid01, Labelling, MarkedEWTableau,
                   big_phi_direct, big_phi_inverse, big_phi_zeta,
                   cornersupport_mask_bruteforce, cornersupport_mask_fast,
                   decompose, enumerate_ew, enumerate_lpara, enumerate_lrib,
                   enumerate_mew, eta, expand, h_statistics, phi, psi,
                   sort_to_staircase, stable_order, validate_lpara,
                   validate_lrib, zeta)
from tabij import fixtures as fx
from tabij.ew import random_ew

SMALL = [(m, n) for m in range(1, 5) for n in range(1, 5)]


def ew_by_definition(m, n):
    out = set()
    for bits in itertools.product((0, 1), repeat=(m - 1) * n):
        rows = ((1,) * n,) + tuple(tuple(bits[k * n:(k + 1) * n]) for k in range(m - 1))
        if any(all(r) for r in rows[1:]):
            continue
        if any(rows[a][c] == rows[b][d] != rows[a][d] == rows[b][c]
               for a, b in itertools.combinations(range(m), 2)
               for c, d in itertools.combinations(range(n), 2)):
            continue
        out.add("/".join("".join(map(str, r)) for r in rows))
    return out


def test_c01_ew_3x2_listing(criterion):
    with criterion(1, "|EW_{3,2}| = 7 and the listing matches", 1):
        got = [str(t) for t in enumerate_ew(3, 2)]
        assert len(got) == 7
        assert set(got) == set(fx.EW_3x2) == ew_by_definition(3, 2)


def test_c02_phi_golden(criterion):
    with criterion(2, "phi golden examples (3x2 and 7x13)", 1):
        for g, rows, cols, ribbon in fx.PHI_3x2:
            d = phi(EWTableau(Grid01.parse(g)))
            assert d.grid == Grid01.parse(ribbon)
            assert d.labels == Labelling(rows, cols)
        t = EWTableau(Grid01.parse(fx.BIG))
        sc, labels = sort_to_staircase(t)
        assert sc == Grid01.parse(fx.BIG_STAIRCASE)
        assert labels == Labelling(fx.BIG_ROWS, fx.BIG_COLS)
        d = phi(t)
        assert d.grid == Grid01.parse(fx.BIG_RIBBON)
        assert d.labels == labels


def test_c03_psi_golden(criterion):
    with criterion(3, "psi golden example (3x4)", 1):
        g, rows, cols = fx.PSI_RIBBON
        t = psi(validate_lrib(Grid01.parse(g), Labelling(rows, cols)))
        assert t.grid == Grid01.parse("1111/0000/1010")


def test_c04_round_trips(criterion):
    with criterion(4, "psi.phi = id and phi.psi = id, m,n <= 4, (5,3), (3,5)", 60):
        for m, n in SMALL + [(5, 3), (3, 5)]:
            ew = list(enumerate_ew(m, n))
            lrib = list(enumerate_lrib(m, n))
            assert len(ew) == len(lrib), (m, n)
            assert all(psi(phi(t)) == t for t in ew)
            assert all(phi(psi(d)) == d for d in lrib)


def test_c05_eta_golden(criterion):
    with criterion(5, "eta golden values and the four decorations", 1):
        small = EWTableau(Grid01.parse(fx.SUPPORT_4x4))
        assert eta(small) == (1, 2, 1, 1, 1, 2, 1)
        assert eta(EWTableau(Grid01.parse(fx.BIG))) == fx.BIG_ETA
        decorations = [mt.a for mt in enumerate_mew(4, 4) if mt.tableau == small]
        assert len(decorations) == 4
        assert set(decorations) == set(fx.DECORATIONS_4x4)


def test_c06_mask_equivalence(criterion):
    with criterion(6, "fast cornersupport mask = brute force", 60):
        for m, n in SMALL:
            for t in enumerate_ew(m, n):
                assert cornersupport_mask_fast(t) == cornersupport_mask_bruteforce(t)
        rng = random.Random(20240611)
        for _ in range(1000):
            t = random_ew(rng.randint(1, 7), rng.randint(1, 13), rng)
            assert cornersupport_mask_fast(t) == cornersupport_mask_bruteforce(t), t
        big = EWTableau(Grid01.parse(fx.BIG))
        mask = cornersupport_mask_fast(big)
        shown = ["".join("~" if c else str(x) for c, x in zip(mr, gr))
                 for mr, gr in zip(mask, big.grid.rows)]
        assert shown == fx.NON_SUPPORT_7x13


def test_c07_surplus_golden(criterion):
    with criterion(7, "surplus decomposition golden example", 1):
        d = validate_lpara(Grid01.parse(fx.PARA_6x4), Labelling(fx.SURPLUS_ROWS, fx.SURPLUS_COLS))
        rib, z = decompose(d)
        assert z == (0, 1, 0, 1, 1, 0, 0, 0, 1)
        assert rib.labels == Labelling(fx.SURPLUS_RIBBON_ROWS, fx.SURPLUS_RIBBON_COLS)
        assert expand(rib, z) == d


def test_c08_big_phi_golden(criterion):
    with criterion(8, "Phi golden example via both presentations", 1):
        mt = MarkedEWTableau(EWTableau(Grid01.parse(fx.BIG)), fx.MARKED_A2)
        assert zeta(mt) == (0, 0, 2, 3, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 2, 1, 0, 0, 0)
        h = h_statistics(mt)
        assert h == fx.MARKED_A2_H
        assert stable_order(h[:6]) == (4, 6, 2, 3, 1, 5)
        assert stable_order(h[6:]) == (2, 7, 11, 12, 13, 9, 8, 10, 6, 1, 4, 3, 5)
        via_zeta, direct = big_phi_zeta(mt), big_phi_direct(mt)
        assert via_zeta == direct
        assert direct.grid == Grid01.parse(fx.MARKED_A2_IMAGE)
        assert direct.labels == Labelling(fx.MARKED_A2_IMAGE_ROWS, fx.MARKED_A2_IMAGE_COLS)


def test_c09_big_phi_bijection(criterion):
    with criterion(9, "Phi and its inverse are mutually inverse, m,n <= 3 and (4,3)", 120):
        assert len(list(enumerate_mew(3, 2))) == 12
        assert len(list(enumerate_lpara(3, 2))) == 12
        for m, n in [(m, n) for m in range(1, 4) for n in range(1, 4)] + [(4, 3)]:
            mew = list(enumerate_mew(m, n))
            lpara = set(enumerate_lpara(m, n))
            assert len(mew) == len(lpara)
            images = set()
            for mt in mew:
                d = big_phi_zeta(mt)
                assert big_phi_inverse(d) == mt
                images.add(d)
            assert images == lpara
            assert all(big_phi_zeta(big_phi_inverse(d)) == d for d in lpara)


def test_c10_markability(criterion):
    with criterion(10, "every line has a markable entry, m,n <= 4", 30):
        for m, n in SMALL:
            for t in enumerate_ew(m, n):
                mask = cornersupport_mask_bruteforce(t)
                g = t.grid.rows
                for i in range(1, m):
                    assert any(g[i][j] == 0 and not mask[i][j] for j in range(n))
                for j in range(n):
                    assert any(g[i][j] == 1 and not mask[i][j] for i in range(m))

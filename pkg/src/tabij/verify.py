"""Exhaustive checks of the bijections at a fixed size, plus the worked examples.

Each check reports the first counterexample it meets, serialized in the grid
text format, so a failure can be replayed with ``tabij map``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import fixtures as fx
from .bijections import (big_phi_direct, big_phi_inverse, big_phi_zeta,
                         h_statistics, phi, psi, stable_order, zeta)
from .ew import (MAX_FREE_CELLS, EWTableau, MarkedEWTableau,
                 cornersupport_mask_bruteforce, cornersupport_mask_fast,
                 enumerate_ew, enumerate_mew, eta, marks_from_decoration)
from .grid import Grid01, Labelling, to_text
from .polyomino import (MAX_SEMIPERIMETER, LabelledPara, bounce, decompose,
                        enumerate_lpara, enumerate_lrib, expand, validate_lpara,
                        validate_lrib, validate_para)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    counterexample: Optional[str] = None


def _text(obj) -> str:
    if isinstance(obj, EWTableau):
        return to_text(obj.grid)
    if isinstance(obj, MarkedEWTableau):
        return to_text(obj.tableau.grid, decoration=obj.a)
    if isinstance(obj, LabelledPara):
        return to_text(obj.grid, obj.labels)
    return str(obj)


def _first_failure(items, ok: Callable) -> Optional[str]:
    for x in items:
        try:
            good = ok(x)
        except Exception as exc:  # a crash is a counterexample too
            return _text(x) + f"# raised {type(exc).__name__}: {exc}\n"
        if not good:
            return _text(x)
    return None


def _check(name, items, ok, detail=""):
    bad = _first_failure(items, ok)
    return CheckResult(name, bad is None, detail, bad)


def _markable(t: EWTableau) -> bool:
    return all(e >= 1 for e in eta(t, cornersupport_mask_bruteforce(t)))


def size_checks(m: int, n: int, max_cells: int = MAX_FREE_CELLS,
                max_size: int = MAX_SEMIPERIMETER) -> list[CheckResult]:
    ew = list(enumerate_ew(m, n, max_cells))
    lrib = list(enumerate_lrib(m, n, max_size))
    mew = list(enumerate_mew(m, n, max_cells))
    lpara = list(enumerate_lpara(m, n, max_size))
    out = [
        CheckResult("|EW| = |LRib|", len(ew) == len(lrib),
                    f"|EW|={len(ew)}, |LRib|={len(lrib)}"),
        _check("psi(phi(T)) = T", ew, lambda t: psi(phi(t)) == t),
        _check("phi(psi(D)) = D", lrib, lambda d: phi(psi(d)) == d),
        CheckResult("phi(EW) = LRib", {phi(t) for t in ew} == set(lrib)),
        _check("fast mask = brute-force mask", ew,
               lambda t: cornersupport_mask_fast(t) == cornersupport_mask_bruteforce(t)),
        _check("every line has a markable entry", ew, _markable),
        CheckResult("|MEW| = |LPara|", len(mew) == len(lpara),
                    f"|MEW|={len(mew)}, |LPara|={len(lpara)}"),
        _check("Phi direct = Phi via zeta", mew,
               lambda x: big_phi_direct(x) == big_phi_zeta(x)),
        _check("Phi^-1(Phi(M)) = M", mew, lambda x: big_phi_inverse(big_phi_zeta(x)) == x),
        _check("Phi(Phi^-1(D)) = D", lpara, lambda d: big_phi_zeta(big_phi_inverse(d)) == d),
        _check("expand(decompose(D)) = D", lpara, lambda d: expand(*decompose(d)) == d),
        _check("zero marking reduces Phi to phi", ew,
               lambda t: big_phi_zeta(MarkedEWTableau(t, tuple(e - 1 for e in eta(t))))
               == phi(t)),
    ]
    return out


def golden_checks() -> list[CheckResult]:
    out = []

    def add(name, fn):
        try:
            out.append(CheckResult(name, bool(fn())))
        except Exception as exc:
            out.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))

    big = EWTableau(Grid01.parse(fx.BIG))
    add("EW(3,2) listing", lambda: sorted(str(t) for t in enumerate_ew(3, 2)) == sorted(fx.EW_3x2))
    add("eta of 4x4 example",
        lambda: eta(EWTableau(Grid01.parse(fx.SUPPORT_4x4))) == fx.ETA_4x4)
    add("eta of 7x13 example", lambda: eta(big) == fx.BIG_ETA)
    add("non-cornersupport table of 7x13 example",
        lambda: [''.join('~' if c else str(x) for c, x in zip(mr, gr))
                 for mr, gr in zip(cornersupport_mask_bruteforce(big), big.grid.rows)]
        == fx.NON_SUPPORT_7x13)
    add("phi of 3x2 examples", lambda: all(
        phi(EWTableau(Grid01.parse(g))) == validate_lrib(Grid01.parse(r), Labelling(rows, cols))
        for g, rows, cols, r in fx.PHI_3x2))
    add("phi of 7x13 example", lambda: phi(big) == validate_lrib(
        Grid01.parse(fx.BIG_RIBBON), Labelling(fx.BIG_ROWS, fx.BIG_COLS)))
    add("psi of 3x4 example", lambda: psi(validate_lrib(
        Grid01.parse(fx.PSI_RIBBON[0]), Labelling(*fx.PSI_RIBBON[1:]))).grid
        == Grid01.parse(fx.PSI_IMAGE))
    add("bounce of 6x4 example",
        lambda: bounce(validate_para(Grid01.parse(fx.PARA_6x4))).grid
        == Grid01.parse(fx.BOUNCE_6x4))

    def surplus_ok():
        d = validate_lpara(Grid01.parse(fx.PARA_6x4), Labelling(fx.SURPLUS_ROWS, fx.SURPLUS_COLS))
        rib, z = decompose(d)
        return (z == fx.SURPLUS and rib.labels.row_labels == fx.SURPLUS_RIBBON_ROWS
                and rib.labels.col_labels == fx.SURPLUS_RIBBON_COLS and expand(rib, z) == d)
    add("surplus of 6x4 example", surplus_ok)

    def marks_ok():
        return marks_from_decoration(MarkedEWTableau(big, fx.MARKED_A1)) == fx.MARKED_A1_CELLS
    add("marks of 7x13 example", marks_ok)

    def big_phi_ok():
        mt = MarkedEWTableau(big, fx.MARKED_A2)
        h = h_statistics(mt)
        want = validate_lpara(Grid01.parse(fx.MARKED_A2_IMAGE),
                              Labelling(fx.MARKED_A2_IMAGE_ROWS, fx.MARKED_A2_IMAGE_COLS))
        return (zeta(mt) == fx.MARKED_A2_ZETA and h == fx.MARKED_A2_H
                and stable_order(h[:6]) == fx.MARKED_A2_PI
                and stable_order(h[6:]) == fx.MARKED_A2_SIGMA
                and big_phi_zeta(mt) == want and big_phi_direct(mt) == want
                and big_phi_inverse(want) == mt)
    add("Phi of 7x13 example", big_phi_ok)
    return out


def format_report(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.name.ljust(width)}  {status}  {r.detail}".rstrip())
    return "\n".join(lines) + "\n"

# Marked tableaux and the lifted bijection
#
# Marking one markable entry in every line (a 0 in each lower row, a 1 in
# each column) turns an EW-tableau into a marked tableau.  The choice in line
# i is a number a_i below eta_i.  The lifted map sends a marked tableau to a
# labelled parallelogram polyomino: take the labelled ribbon phi(T) and grow
# line i by zeta_i = eta_i - a_i - 1 cells.  A second construction reads the
# boundary of the polyomino directly from per-line statistics h and two
# stable sorts; both give the same answer.

from tabij import (EWTableau, Grid01, MarkedEWTableau, big_phi_direct,
                   big_phi_inverse, big_phi_zeta, enumerate_lpara,
                   enumerate_mew, eta, h_statistics, marks_from_decoration,
                   zeta)
from tabij.render import render_ascii

t = EWTableau(Grid01.parse("1111/0011/1011/0011"))
# mark the first markable entry of every line, so zeta is as large as it gets
mt = MarkedEWTableau(t, (0,) * len(eta(t)))
print("eta =", mt.eta, " a =", mt.a)
print("marked entries shown as @ (a marked 1) and o (a marked 0)")
print(render_ascii(t.grid, marks=marks_from_decoration(mt)))

print("zeta =", zeta(mt))
print("h    =", h_statistics(mt))
d = big_phi_zeta(mt)
print(render_ascii(d.grid, d.labels))
print("direct construction agrees:", big_phi_direct(mt) == d)
print("inverse recovers the marking:", big_phi_inverse(d) == mt)
print()

for m, n in [(3, 2), (3, 3), (4, 3)]:
    mew = list(enumerate_mew(m, n))
    images = {big_phi_zeta(x) for x in mew}
    print(f"{m}x{n}: {len(mew)} marked tableaux -> {len(images)} distinct images, "
          f"onto: {images == set(enumerate_lpara(m, n))}")

# From tableaux to labelled ribbons and back
#
# phi sorts a tableau into staircase form (columns by number of ones, rows by
# decreasing number of ones), remembering where each line came from as a
# label, and then traces the boundary between the ones and the zeros.  The
# trace is a ribbon: a lattice path of cells from the top-left corner to the
# bottom-right one.  psi reverses the construction.

from tabij import EWTableau, Grid01, enumerate_ew, enumerate_lrib, phi, psi
from tabij.render import render_ascii

t = EWTableau(Grid01.parse("1111/0011/1011/0011"))
print("tableau")
print(render_ascii(t.grid))

d = phi(t)
print("its labelled ribbon (label k is written vk)")
print(render_ascii(d.grid, d.labels))

back = psi(d)
print("psi gives the tableau back:", back == t)
print()

# The two maps are inverse on every size we can enumerate.
for m, n in [(3, 2), (3, 3), (4, 4)]:
    ew = list(enumerate_ew(m, n))
    lrib = set(enumerate_lrib(m, n))
    ok = {phi(x) for x in ew} == lrib and all(psi(phi(x)) == x for x in ew)
    print(f"{m}x{n}: {len(ew)} tableaux, {len(lrib)} labelled ribbons, bijective: {ok}")

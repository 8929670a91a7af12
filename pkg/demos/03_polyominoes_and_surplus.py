# Parallelogram polyominoes, bounce paths and surplus
#
# A parallelogram polyomino, drawn as 0/1 cells, has contiguous rows whose
# ends move weakly right as we go down, with both corners filled.  Its bounce
# path is the ribbon found by walking right to the end of a row, then down to
# the bottom of that column, and so on.  Once the rows and columns carry
# labels, the polyomino is determined by the labelled bounce ribbon together
# with how far each line sticks out beyond it: the surplus vector.

from tabij import (Grid01, Labelling, bounce, decompose, enumerate_lpara,
                   enumerate_para, expand, validate_lpara, validate_para)
from tabij.render import render_ascii

p = validate_para(Grid01.parse("1100/1100/0110/0111/0011/0011"))
print(render_ascii(p.grid))
print("bounce path")
print(render_ascii(bounce(p).grid))

d = validate_lpara(p.grid, Labelling((0, 4, 1, 3, 2, 5), (6, 8, 9, 7)))
ribbon, surplus = decompose(d)
print("labelled ribbon")
print(render_ascii(ribbon.grid, ribbon.labels))
print("surplus, indexed by label:", surplus)
print("expand recovers the polyomino:", expand(ribbon, surplus) == d)
print()

# Labelled polyominoes are counted by spanning trees of K(m,n).
for m, n in [(2, 2), (3, 2), (3, 3), (4, 3)]:
    count = sum(1 for _ in enumerate_lpara(m, n))
    print(f"{m}x{n}: {sum(1 for _ in enumerate_para(m, n))} shapes, "
          f"{count} labelled, m^(n-1) n^(m-1) = {m ** (n - 1) * n ** (m - 1)}")

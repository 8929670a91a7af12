# EW-tableaux and cornersupport entries
#
# An EW-tableau is a 0/1 rectangle whose top row is all ones, whose other
# rows each contain a 0, and which never contains the pattern
#
#     1 0        0 1
#     0 1   or   1 0
#
# in any two rows and two columns.  This script lists a small family, then
# looks at which entries can carry a mark.

from tabij import EWTableau, Grid01, cornersupport_mask_fast, enumerate_ew, eta
from tabij.ew import mask_to_text
from tabij.render import render_ascii

# All seven 3x2 tableaux, in lexicographic order.
for t in enumerate_ew(3, 2):
    print(t)
print()

# Counts grow quickly; four-by-four already has a few hundred.
for m, n in [(2, 2), (3, 3), (4, 3), (4, 4)]:
    print(f"|EW({m},{n})| =", sum(1 for _ in enumerate_ew(m, n)))
print()

# An entry is "cornersupport" when it sits at the corner of a rectangle
# whose opposite corner holds the other bit while the two remaining corners
# match it.  Such entries can never be marked.  The annotation below uses
# 'c' for cornersupport and 'n' for markable.
t = EWTableau(Grid01.parse("1111/0110/0100/0000"))
mask = cornersupport_mask_fast(t)
print(render_ascii(t.grid))
print(mask_to_text(mask))

# eta counts markable 0s in each lower row, then markable 1s in each column.
# Every count is at least one.
print("eta =", eta(t, mask))

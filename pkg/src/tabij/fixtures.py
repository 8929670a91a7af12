"""Worked examples with known answers, shared by ``tabij verify`` and the tests.

Grids use the slash shorthand of :meth:`Grid01.parse`.  ``NON_SUPPORT_7x13``
shows non-cornersupport entries as their bit and cornersupport entries as
``~``.
"""

EW_3x2 = ["11/01/01", "11/10/10", "11/01/00", "11/00/01", "11/10/00", "11/00/10", "11/00/00"]

ENTRY_GRID = "11111/10011/00010/10011"
ENTRY_VALUES = {(4, 5): 1, (4, 4): 1, (4, 3): 0}

SUPPORT_4x4 = "1111/0010/0011/0010"
SUPPORT_4x4_CELLS = {(1, 3): True, (2, 2): True}
ETA_4x4 = (1, 2, 1, 1, 1, 2, 1)
DECORATIONS_4x4 = [(0, 0, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0, 0),
                   (0, 0, 0, 0, 0, 1, 0), (0, 1, 0, 0, 0, 1, 0)]

BIG = "1111111111111/0011100000000/1011110111000/1011100000000/1011110111000/0011100000000/1011110111000"
BIG_STAIRCASE = "1111111111111/0000011111111/0000011111111/0000011111111/0000000001111/0000000000111/0000000000111"
BIG_ROWS = (0, 2, 4, 6, 3, 1, 5)
BIG_COLS = (8, 13, 17, 18, 19, 12, 14, 15, 16, 7, 9, 10, 11)
BIG_RIBBON = "1111100000000/0000100000000/0000100000000/0000111110000/0000000011000/0000000001000/0000000001111"
BIG_ETA = (1, 5, 4, 5, 1, 5, 1, 1, 2, 2, 2, 3, 1, 3, 3, 3, 1, 1, 1)

NON_SUPPORT_7x13 = ["~1~~~~1~~~111", "0~111~~~~~~~~", "~0~~~10111000", "1~~~~0~000~~~",
                    "~0~~~10111000", "0~111~~~~~~~~", "~0~~~10111000"]

# first marked example on the 7x13 tableau, with its starred cells
MARKED_A1 = (0, 2, 1, 4, 0, 2, 0, 0, 1, 0, 1, 2, 0, 0, 2, 1, 0, 0, 0)
MARKED_A1_CELLS = frozenset([
    (1, 2), (1, 7), (1, 11), (1, 12), (1, 13), (2, 1), (2, 4), (3, 8), (3, 11), (4, 1),
    (4, 8), (5, 10), (5, 13), (6, 1), (6, 3), (6, 5), (7, 6), (7, 9), (7, 11)])

# second marked example, fed through both constructions of the lifted map
MARKED_A2 = (0, 4, 1, 1, 0, 3, 0, 0, 1, 0, 1, 2, 0, 1, 0, 1, 0, 0, 0)
MARKED_A2_ZETA = (0, 0, 2, 3, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 2, 1, 0, 0, 0)
MARKED_A2_H = (10, 5, 7, 2, 10, 4, 5, 1, 7, 6, 7, 4, 1, 3, 2, 3, 1, 1, 1)
MARKED_A2_PI = (4, 6, 2, 3, 1, 5)
MARKED_A2_SIGMA = (2, 7, 11, 12, 13, 9, 8, 10, 6, 1, 4, 3, 5)
MARKED_A2_IMAGE = "1111100000000/0111110000000/0001111100000/0000111110000/0000001111000/0000000001100/0000000001111"
MARKED_A2_IMAGE_ROWS = (0, 4, 6, 2, 3, 1, 5)
MARKED_A2_IMAGE_COLS = (8, 13, 17, 18, 19, 15, 14, 16, 12, 7, 10, 9, 11)

# (input, staircase rows, staircase cols, ribbon) for three small tableaux
PHI_3x2 = [
    ("11/00/00", (0, 1, 2), (3, 4), "11/01/01"),
    ("11/00/01", (0, 2, 1), (3, 4), "10/11/01"),
    ("11/10/10", (0, 1, 2), (4, 3), "10/10/11"),
]

PSI_RIBBON = ("1100/0111/0001", (0, 2, 1), (4, 6, 3, 5))
PSI_IMAGE = "1111/0000/1010"

PSI_RIBBON_4x5 = ("11100/00100/00111/00001", (0, 2, 3, 1), (4, 6, 8, 5, 7))
PSI_IMAGE_4x5 = "11111/00000/01010/01010"

PARA_6x4 = "1100/1100/0110/0111/0011/0011"
RIB_6x4 = "1100/0100/0100/0110/0010/0011"
BOUNCE_6x4 = "1100/0100/0100/0111/0001/0001"

SURPLUS_ROWS = (0, 4, 1, 3, 2, 5)
SURPLUS_COLS = (6, 8, 9, 7)
SURPLUS_RIBBON_ROWS = (0, 1, 3, 4, 2, 5)
SURPLUS_RIBBON_COLS = (6, 8, 7, 9)
SURPLUS = (0, 1, 0, 1, 1, 0, 0, 0, 1)

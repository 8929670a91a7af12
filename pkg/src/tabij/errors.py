"""Exception hierarchy.

Every validation failure is a :class:`TabijError` (itself a ``ValueError``),
so callers that only care about "bad input" can catch one type.
"""


class TabijError(ValueError):
    pass


# -- parsing -----------------------------------------------------------------

class ParseError(TabijError):
    pass


class DimensionError(TabijError):
    pass


class LengthError(DimensionError):
    pass


class LabelError(TabijError):
    pass


class SizeGuardError(TabijError):
    pass


# -- EW-tableaux -------------------------------------------------------------

class TopRowError(TabijError):
    def __init__(self, col):
        self.col = col
        super().__init__(f"clause (i): top row has a 0 in column {col}")


class AllOnesRowError(TabijError):
    def __init__(self, row):
        self.row = row
        super().__init__(f"clause (ii): row {row} contains no 0")


class RectanglePatternError(TabijError):
    def __init__(self, rows, cols):
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        super().__init__(
            f"clause (iii): rows {self.rows} and columns {self.cols} "
            "carry 0s on one diagonal and 1s on the other")


class DecorationRangeError(TabijError):
    def __init__(self, index, value, bound):
        self.index = index
        super().__init__(
            f"decoration a_{index} = {value} outside [0, {bound - 1}]")


class MarkPlacementError(TabijError):
    pass


# -- polyominoes -------------------------------------------------------------

class CornerError(TabijError):
    pass


class RowGapError(TabijError):
    def __init__(self, row, msg):
        self.row = row
        super().__init__(f"row {row}: {msg}")


class MonotonicityError(TabijError):
    def __init__(self, rows, msg):
        self.rows = tuple(rows)
        super().__init__(f"rows {self.rows}: {msg}")


class OverlapError(TabijError):
    def __init__(self, rows):
        self.rows = tuple(rows)
        super().__init__(f"rows {self.rows} share no column")


class AreaError(TabijError):
    pass


class LabelConventionError(TabijError):
    def __init__(self, kind, positions, labels):
        self.kind = kind
        self.positions = tuple(positions)
        self.labels = tuple(labels)
        super().__init__(
            f"{kind} {self.positions} share a boundary but labels "
            f"{self.labels} are not increasing")


class SupportError(TabijError):
    pass


class ConsistencyError(TabijError):
    pass

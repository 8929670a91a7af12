"""Bit grids, labellings and their text/JSON serialization.

Positions are 1-based ``(row, column)`` pairs with row 1 at the top and
column 1 at the left.  Labels are plain integers, ``i`` standing for the
vertex ``v_i``; rows of an ``m x n`` object carry ``0..m-1`` and columns
carry ``m..m+n-1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DimensionError, LabelError, LengthError, ParseError


@dataclass(frozen=True)
class Grid01:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if not rows or not rows[0]:
            raise DimensionError("grid must have at least one row and column")
        n = len(rows[0])
        for i, r in enumerate(rows, 1):
            if len(r) != n:
                raise DimensionError(f"row {i} has {len(r)} cells, expected {n}")
            if any(x not in (0, 1) for x in r):
                raise ParseError(f"row {i} has entries outside {{0,1}}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_strings(cls, lines: Iterable[str]) -> "Grid01":
        """Build from bit strings, e.g. ``Grid01.from_strings("11/01".split("/"))``."""
        out = []
        for i, line in enumerate(lines, 1):
            if any(c not in "01" for c in line):
                raise ParseError(f"line {i}: characters outside {{0,1}}: {line!r}")
            out.append(tuple(int(c) for c in line))
        return cls(tuple(out))

    @classmethod
    def parse(cls, spec: str) -> "Grid01":
        """Slash-separated shorthand: ``"11/00/01"``."""
        return cls.from_strings(spec.split("/"))

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def __getitem__(self, pos: tuple[int, int]) -> int:
        i, j = pos
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise IndexError(f"cell {pos} outside {self.m}x{self.n} grid")
        return self.rows[i - 1][j - 1]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j - 1] for r in self.rows)

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.rows))

    def count_ones(self) -> int:
        return sum(map(sum, self.rows))

    def to_strings(self) -> list[str]:
        return ["".join(map(str, r)) for r in self.rows]

    def permuted(self, row_order: Sequence[int], col_order: Sequence[int]) -> "Grid01":
        """New grid whose row ``k`` is old row ``row_order[k]`` (0-based), same for columns."""
        return Grid01(tuple(tuple(self.rows[i][j] for j in col_order) for i in row_order))

    def __str__(self):
        return "/".join(self.to_strings())


def grid_from_function(m: int, n: int, f) -> Grid01:
    """Grid with cell ``(i, j)`` (1-based) set to ``f(i, j)``."""
    return Grid01(tuple(tuple(1 if f(i, j) else 0 for j in range(1, n + 1))
                        for i in range(1, m + 1)))


@dataclass(frozen=True)
class Labelling:
    row_labels: tuple[int, ...]
    col_labels: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(x) for x in self.row_labels)
        cols = tuple(int(x) for x in self.col_labels)
        m, n = len(rows), len(cols)
        if sorted(rows) != list(range(m)):
            raise LabelError(f"row labels {rows} are not a permutation of 0..{m - 1}")
        if sorted(cols) != list(range(m, m + n)):
            raise LabelError(
                f"column labels {cols} are not a permutation of {m}..{m + n - 1}")
        object.__setattr__(self, "row_labels", rows)
        object.__setattr__(self, "col_labels", cols)

    @classmethod
    def canonical(cls, m: int, n: int) -> "Labelling":
        return cls(tuple(range(m)), tuple(range(m, m + n)))

    @property
    def m(self) -> int:
        return len(self.row_labels)

    @property
    def n(self) -> int:
        return len(self.col_labels)

    def row_of(self, label: int) -> int:
        """1-based row position carrying ``label``."""
        return self.row_labels.index(label) + 1

    def col_of(self, label: int) -> int:
        return self.col_labels.index(label) + 1

    def as_tuple(self) -> tuple[int, ...]:
        return self.row_labels + self.col_labels


def _check_labels(grid: Grid01, labels: Optional[Labelling]):
    if labels is not None and (labels.m, labels.n) != (grid.m, grid.n):
        raise LabelError(
            f"labelling is {labels.m}x{labels.n} but grid is {grid.m}x{grid.n}")


def _check_decoration(grid: Grid01, decoration):
    if decoration is None:
        return None
    decoration = tuple(int(x) for x in decoration)
    want = grid.m + grid.n - 1
    if len(decoration) != want:
        raise LengthError(f"decoration has {len(decoration)} entries, expected {want}")
    return decoration


# -- text format -------------------------------------------------------------

def to_text(grid: Grid01, labels: Optional[Labelling] = None,
            decoration: Optional[Sequence[int]] = None) -> str:
    _check_labels(grid, labels)
    decoration = _check_decoration(grid, decoration)
    out = [f"grid: {grid.m} {grid.n}"]
    out.extend(grid.to_strings())
    if labels is not None:
        out.append("rows: " + " ".join(map(str, labels.row_labels)))
        out.append("cols: " + " ".join(map(str, labels.col_labels)))
    if decoration is not None:
        out.append("decoration: " + " ".join(map(str, decoration)))
    return "\n".join(out) + "\n"


def _ints(key, value, lineno):
    try:
        return tuple(int(tok) for tok in value.split())
    except ValueError:
        raise ParseError(f"line {lineno}: {key} expects integers, got {value!r}") from None


def parse_text(text: str):
    """Parse the ``grid: m n`` text format.

    Returns ``(grid, labels, decoration)``; the last two are ``None`` when
    absent.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty input")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "grid:":
        raise ParseError(f"line 1: expected 'grid: <m> <n>', got {lines[0]!r}")
    try:
        m, n = int(head[1]), int(head[2])
    except ValueError:
        raise ParseError(f"line 1: bad dimensions {lines[0]!r}") from None
    if m < 1 or n < 1:
        raise DimensionError(f"dimensions must be positive, got {m}x{n}")
    body = lines[1:1 + m]
    if len(body) < m:
        raise DimensionError(f"expected {m} grid rows, got {len(body)}")
    for k, line in enumerate(body, 2):
        if ":" in line:
            raise DimensionError(f"expected {m} grid rows, got {k - 2}")
        if any(c not in "01" for c in line):
            raise ParseError(f"line {k}: characters outside {{0,1}}: {line!r}")
        if len(line) != n:
            raise DimensionError(f"line {k}: row has {len(line)} cells, expected {n}")
    grid = Grid01.from_strings(body)

    fields = {}
    for k, line in enumerate(lines[1 + m:], 2 + m):
        key, sep, value = line.partition(":")
        if not sep or key not in ("rows", "cols", "decoration"):
            raise ParseError(f"line {k}: unexpected {line!r}")
        if key in fields:
            raise ParseError(f"line {k}: duplicate {key!r}")
        fields[key] = _ints(key, value, k)
    return _assemble(grid, fields.get("rows"), fields.get("cols"), fields.get("decoration"))


def _assemble(grid, rows, cols, decoration):
    labels = None
    if (rows is None) != (cols is None):
        raise LabelError("row and column labels must be given together")
    if rows is not None:
        labels = Labelling(rows, cols)
        _check_labels(grid, labels)
    return grid, labels, _check_decoration(grid, decoration)


# -- JSON format -------------------------------------------------------------

_JSON_KEYS = {"m", "n", "grid", "row_labels", "col_labels", "decoration"}


def to_json(grid: Grid01, labels: Optional[Labelling] = None,
            decoration: Optional[Sequence[int]] = None) -> str:
    _check_labels(grid, labels)
    decoration = _check_decoration(grid, decoration)
    obj = {"m": grid.m, "n": grid.n, "grid": grid.to_strings()}
    if labels is not None:
        obj["row_labels"] = list(labels.row_labels)
        obj["col_labels"] = list(labels.col_labels)
    if decoration is not None:
        obj["decoration"] = list(decoration)
    return json.dumps(obj) + "\n"


def parse_json(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ParseError("JSON input must be an object")
    unknown = set(obj) - _JSON_KEYS
    if unknown:
        raise ParseError(f"unknown keys: {sorted(unknown)}")
    for key in ("m", "n", "grid"):
        if key not in obj:
            raise ParseError(f"missing key {key!r}")
    m, n, rows = obj["m"], obj["n"], obj["grid"]
    if not (isinstance(rows, list) and all(isinstance(r, str) for r in rows)):
        raise ParseError("'grid' must be a list of strings")
    if len(rows) != m or any(len(r) != n for r in rows):
        raise DimensionError(f"grid does not match declared size {m}x{n}")
    grid = Grid01.from_strings(rows)
    return _assemble(grid, obj.get("row_labels"), obj.get("col_labels"),
                     obj.get("decoration"))


def parse_any(text: str):
    """Dispatch on the first non-blank character: JSON objects start with ``{``."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)

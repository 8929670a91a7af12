"""ASCII and SVG pictures of grids, in the usual figure style:
filled cells for 1s, row labels on the left and column labels on top."""

from __future__ import annotations

from typing import Optional
from xml.etree.ElementTree import Element, SubElement, tostring

from .grid import Grid01, Labelling

CELL = 20
FILL_STYLE = "fill:#b0b0b0;stroke:black;stroke-width:1"
GRID_STYLE = "stroke:#c0c0c0;stroke-width:1"


def render_ascii(grid: Grid01, labels: Optional[Labelling] = None,
                 marks=frozenset()) -> str:
    """``#`` for 1 and ``.`` for 0.  Cells in ``marks`` get a ``*`` suffix
    when labelled; unlabelled, a marked 1 is ``@`` and a marked 0 is ``o``."""
    if labels is None:
        return "\n".join(
            "".join("#.@o"[(1 - x) + 2 * ((i, j) in marks)]
                    for j, x in enumerate(row, 1))
            for i, row in enumerate(grid.rows, 1)) + "\n"

    col_names = [f"v{c}" for c in labels.col_labels]
    row_names = [f"v{r}" for r in labels.row_labels]
    w = max(len(s) for s in col_names) + (1 if marks else 0)
    gutter = max(len(s) for s in row_names)
    lines = [" " * gutter + " " + " ".join(s.rjust(w) for s in col_names)]
    for i, (name, row) in enumerate(zip(row_names, grid.rows), 1):
        cells = []
        for j, x in enumerate(row, 1):
            glyph = "#" if x else "."
            if (i, j) in marks:
                glyph += "*"
            cells.append(glyph.rjust(w))
        lines.append(name.rjust(gutter) + " " + " ".join(cells))
    return "\n".join(lines) + "\n"


def render_svg(grid: Grid01, labels: Optional[Labelling] = None) -> str:
    """Standalone SVG document; exactly one ``<rect>`` per filled cell."""
    left = top = CELL * 2 if labels is not None else 2
    width = left + grid.n * CELL + 2
    height = top + grid.m * CELL + 2
    svg = Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "width": str(width), "height": str(height),
        "viewBox": f"0 0 {width} {height}",
    })
    lines = SubElement(svg, "g", {"style": GRID_STYLE})
    for i in range(grid.m + 1):
        y = str(top + i * CELL)
        SubElement(lines, "line", {"x1": str(left), "y1": y,
                                   "x2": str(left + grid.n * CELL), "y2": y})
    for j in range(grid.n + 1):
        x = str(left + j * CELL)
        SubElement(lines, "line", {"x1": x, "y1": str(top),
                                   "x2": x, "y2": str(top + grid.m * CELL)})
    cells = SubElement(svg, "g", {"style": FILL_STYLE})
    for i, row in enumerate(grid.rows):
        for j, x in enumerate(row):
            if x:
                SubElement(cells, "rect", {
                    "x": str(left + j * CELL), "y": str(top + i * CELL),
                    "width": str(CELL), "height": str(CELL)})
    if labels is not None:
        text = SubElement(svg, "g", {"font-family": "monospace", "font-size": "10"})
        for i, lab in enumerate(labels.row_labels):
            t = SubElement(text, "text", {"x": str(left - 4),
                                          "y": str(top + i * CELL + CELL * 0.65),
                                          "text-anchor": "end"})
            t.text = f"v{lab}"
        for j, lab in enumerate(labels.col_labels):
            t = SubElement(text, "text", {"x": str(left + j * CELL + CELL / 2),
                                          "y": str(top - 4),
                                          "text-anchor": "middle"})
            t.text = f"v{lab}"
    return tostring(svg, encoding="unicode") + "\n"


def render(grid: Grid01, labels: Optional[Labelling] = None, format: str = "ascii") -> str:
    if format == "ascii":
        return render_ascii(grid, labels)
    if format == "svg":
        return render_svg(grid, labels)
    raise ValueError(f"unknown render format {format!r}")

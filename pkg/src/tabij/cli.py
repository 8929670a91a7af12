"""Command-line front end.

Exit codes: 0 on success, 1 when the input is not a valid object of the
requested kind (or a size guard trips, or a check fails), 2 on usage and I/O
errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import bijections, ew, polyomino, verify
from .errors import TabijError
from .grid import parse_any, to_json, to_text
from .render import render, render_ascii

FAMILIES = ("ew", "mew", "para", "rib", "lpara", "lrib")
OPS = ("phi", "psi", "big-phi", "big-phi-direct", "big-phi-inv",
       "bounce", "decompose", "expand", "sort")
FORMATS = ("text", "json", "ascii", "svg")


class UsageError(Exception):
    pass


def _env_guard():
    raw = os.environ.get("TABIJ_MAX_CELLS")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"TABIJ_MAX_CELLS must be an integer, got {raw!r}") from None


def _guards(args):
    """(EW guard on (m-1)*n, polyomino guard on m+n); ``--max-cells`` or the
    environment override whichever applies to the family at hand."""
    override = args.max_cells if args.max_cells is not None else _env_guard()
    if override is None:
        return ew.MAX_FREE_CELLS, polyomino.MAX_SEMIPERIMETER
    return override, override


def _format(grid, labels=None, decoration=None, fmt="text"):
    if fmt == "text":
        return to_text(grid, labels, decoration)
    if fmt == "json":
        return to_json(grid, labels, decoration)
    return render(grid, labels, fmt)


def _format_obj(obj, fmt):
    if isinstance(obj, ew.MarkedEWTableau):
        if fmt == "ascii":
            return render_ascii(obj.tableau.grid, None, ew.marks_from_decoration(obj))
        return _format(obj.tableau.grid, None, obj.a, fmt)
    if isinstance(obj, polyomino.LabelledPara):
        return _format(obj.grid, obj.labels, None, fmt)
    return _format(obj.grid, None, None, fmt)


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# -- subcommands -----------------------------------------------------------------

def cmd_enumerate(args):
    ew_guard, poly_guard = _guards(args)
    gen = {
        "ew": lambda: ew.enumerate_ew(args.m, args.n, ew_guard),
        "mew": lambda: ew.enumerate_mew(args.m, args.n, ew_guard),
        "para": lambda: polyomino.enumerate_para(args.m, args.n, poly_guard),
        "rib": lambda: polyomino.enumerate_rib(args.m, args.n, poly_guard),
        "lpara": lambda: polyomino.enumerate_lpara(args.m, args.n, poly_guard),
        "lrib": lambda: polyomino.enumerate_lrib(args.m, args.n, poly_guard),
    }[args.family]()
    if args.count_only:
        _write(args.out, f"{sum(1 for _ in gen)}\n")
        return 0
    sep = "" if args.format == "json" else "\n"
    _write(args.out, sep.join(_format_obj(obj, args.format) for obj in gen))
    return 0


def _need(value, what, op):
    if value is None:
        raise TabijError(f"--op {op} needs {what} in the input")
    return value


def apply_op(op, grid, labels, decoration):
    """Run ``op`` on parsed input; returns ``(grid, labels, decoration)``."""
    if op in ("phi", "sort"):
        t = ew.validate_ew(grid)
        if op == "sort":
            sc, lab = ew.sort_to_staircase(t)
            return sc, lab, None
        d = bijections.phi(t)
        return d.grid, d.labels, None
    if op == "psi":
        d = polyomino.validate_lrib(grid, _need(labels, "labels", op))
        return bijections.psi(d).grid, None, None
    if op in ("big-phi", "big-phi-direct"):
        mt = ew.validate_marked(ew.validate_ew(grid), _need(decoration, "a decoration", op))
        f = bijections.big_phi_zeta if op == "big-phi" else bijections.big_phi_direct
        d = f(mt)
        return d.grid, d.labels, None
    if op == "big-phi-inv":
        mt = bijections.big_phi_inverse(
            polyomino.validate_lpara(grid, _need(labels, "labels", op)))
        return mt.tableau.grid, None, mt.a
    if op == "bounce":
        return polyomino.bounce(polyomino.validate_para(grid)).grid, None, None
    if op == "decompose":
        rib, z = polyomino.decompose(
            polyomino.validate_lpara(grid, _need(labels, "labels", op)))
        return rib.grid, rib.labels, z
    if op == "expand":
        d = polyomino.validate_lrib(grid, _need(labels, "labels", op))
        out = polyomino.expand(d, _need(decoration, "a surplus (decoration line)", op))
        return out.grid, out.labels, None
    raise UsageError(f"unknown op {op!r}")


def cmd_map(args):
    grid, labels, decoration = parse_any(_read(args.input))
    g, lab, dec = apply_op(args.op, grid, labels, decoration)
    _write(args.out, _format(g, lab, dec, args.format))
    return 0


def cmd_annotate(args):
    grid, _, _ = parse_any(_read(args.input))
    t = ew.validate_ew(grid)
    mask = ew.cornersupport_mask_fast(t)
    text = ew.mask_to_text(mask) + "eta: " + " ".join(map(str, ew.eta(t, mask))) + "\n"
    _write(args.out, text)
    return 0


def cmd_render(args):
    grid, labels, decoration = parse_any(_read(args.input))
    fmt = args.format if args.format in ("ascii", "svg") else "ascii"
    if fmt == "ascii" and decoration is not None:
        mt = ew.validate_marked(ew.validate_ew(grid), decoration)
        _write(args.out, render_ascii(grid, labels, ew.marks_from_decoration(mt)))
    else:
        _write(args.out, render(grid, labels, fmt))
    return 0


def cmd_verify(args):
    ew_guard, poly_guard = _guards(args)
    results = verify.size_checks(args.m, args.n, ew_guard, poly_guard) + verify.golden_checks()
    _write(args.out, verify.format_report(results))
    failed = [r for r in results if not r.passed]
    if failed:
        first = failed[0]
        msg = f"first failure: {first.name}\n"
        if first.counterexample:
            msg += first.counterexample
        sys.stderr.write(msg)
        return 1
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tabij",
        description="EW-tableaux, parallelogram polyominoes and the bijections between them.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, dims=False, fmt=True, inp=False):
        if dims:
            p.add_argument("-m", type=int, required=True, help="number of rows")
            p.add_argument("-n", type=int, required=True, help="number of columns")
            p.add_argument("--max-cells", type=int, default=None,
                           help="override the enumeration size guard")
        if inp:
            p.add_argument("--in", dest="input", required=True,
                           help="input file in text or JSON format ('-' for stdin)")
        if fmt:
            p.add_argument("--format", choices=FORMATS, default="text")
        p.add_argument("--out", default=None, help="output file (default stdout)")

    p = sub.add_parser("enumerate", help="list every object of a family")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--count-only", action="store_true")
    common(p, dims=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", help="apply one of the maps to an object")
    p.add_argument("--op", choices=OPS, required=True)
    common(p, inp=True)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("annotate", help="cornersupport mask and eta of an EW-tableau")
    common(p, fmt=False, inp=True)
    p.set_defaults(func=cmd_annotate)

    p = sub.add_parser("render", help="ASCII or SVG picture of an object")
    common(p, inp=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="exhaustive bijection checks at one size")
    common(p, dims=True, fmt=False)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "m", 1) < 1 or getattr(args, "n", 1) < 1:
        parser.error("-m and -n must be at least 1")
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"tabij: {exc}\n")
        return 2
    except TabijError as exc:
        sys.stderr.write(f"tabij: {type(exc).__name__}: {exc}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"tabij: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

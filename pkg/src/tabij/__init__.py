"""Rectangular EW-tableaux, labelled parallelogram polyominoes and the
bijections between them."""

from .bijections import (big_phi_direct, big_phi_inverse, big_phi_zeta,
                         h_statistics, phi, phi_as_marked, psi, stable_order, zeta)
from .errors import TabijError
from .ew import (EWTableau, MarkedEWTableau, cornersupport_mask_bruteforce,
                 cornersupport_mask_fast, decoration_from_marks, enumerate_ew,
                 enumerate_mew, eta, is_cornersupport, marks_from_decoration,
                 sort_to_staircase, validate_ew, validate_marked)
from .grid import Grid01, Labelling, parse_json, parse_text, to_json, to_text
from .polyomino import (LabelledPara, LabelledRibbon, ParaPolyomino,
                        RibbonPolyomino, bounce, decompose, enumerate_lpara,
                        enumerate_lrib, enumerate_para, enumerate_rib, expand,
                        validate_lpara, validate_lrib, validate_para,
                        validate_ribbon)
from .render import render

__version__ = "0.1.0"

"""Polynomial roots located where the zero sets of Re f and Im f stop interleaving.

Slices of ``f`` along circles ``|z| = r`` or horizontal lines ``Im z = y``
are studied as the parameter shrinks from a value where the zeros of the
real and imaginary parts are known to alternate.  The first parameter at
which the alternation breaks carries a root of ``f``.
"""

__version__ = "0.1.0"

from .circle import CircleSection, check_sign_pattern, circle_polys, circle_zeros, dominance_radius
from .curves import CurveSet, Polyline, curve_intersections, trace
from .descent import RootReport, SearchFailure, find_all_roots, find_one_root
from .line import LineSection, degenerate_height, line_polys, line_zeros
from .oracle import OracleFailure, RootMatch, aberth_roots, match_root_sets
from .polynomial import PolyFormatError, as_poly, evaluate, read_poly, realify, write_poly

__all__ = [
    "CircleSection",
    "CurveSet",
    "LineSection",
    "OracleFailure",
    "PolyFormatError",
    "Polyline",
    "RootMatch",
    "RootReport",
    "SearchFailure",
    "aberth_roots",
    "as_poly",
    "check_sign_pattern",
    "circle_polys",
    "circle_zeros",
    "curve_intersections",
    "degenerate_height",
    "dominance_radius",
    "evaluate",
    "find_all_roots",
    "find_one_root",
    "line_polys",
    "line_zeros",
    "match_root_sets",
    "read_poly",
    "realify",
    "trace",
    "write_poly",
]

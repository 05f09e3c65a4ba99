"""Explicit lattice and unit-thickness rope embeddings of 2-bridge knots and links.

Given a Conway notation (a_1, ..., a_m) with positive entries and odd
length, this package constructs:

* a self-avoiding cubic-lattice polygon with exactly 10c edges, and a
  folded one with exactly 8c + 2 edges (c the crossing number);
* piecewise smooth curves on cylindrical towers with exact closed-form
  lengths, including a reduced variant of total length at most
  11.39c + 12.37 that passes a unit-tube thickness audit;

and verifies the lattice constructions by projecting to a diagram and
comparing the Goeritz-matrix determinant against the continued-fraction
numerator (cross-checked by a brute-force bracket state sum).
"""

from .conway import (
    ConwayNotation,
    TwoBridgeFraction,
    continued_fraction,
    crossing_number,
    lattice_length_bound,
    parse_conway,
    reduced_ropelength_bound,
    ropelength_bound,
)
from .diagram import (
    KnotDiagram,
    KnotTypeReport,
    gauss_code,
    goeritz_determinant,
    kauffman_determinant,
    project,
    verify_knot_type,
)
from .lattice import LatticePolygon, build_unfolded, edge_count, fold, is_self_avoiding
from .rope import (
    CircularArc,
    HelicalArc,
    LineSegment,
    PiecewiseCurve,
    ReducedPartSpec,
    build_reduced,
    build_tower,
    fold_tower,
    part_length,
    total_length,
)
from .thickness import (
    MIN_TUBE_SCALE,
    ClearanceAnalysis,
    ThicknessReport,
    audit,
    compute_min_h,
    crossing_clearance,
    verify_taylor_minorant,
)

__version__ = "0.1.0"

__all__ = [
    "ConwayNotation",
    "TwoBridgeFraction",
    "parse_conway",
    "crossing_number",
    "continued_fraction",
    "lattice_length_bound",
    "ropelength_bound",
    "reduced_ropelength_bound",
    "LatticePolygon",
    "build_unfolded",
    "fold",
    "edge_count",
    "is_self_avoiding",
    "KnotDiagram",
    "KnotTypeReport",
    "project",
    "goeritz_determinant",
    "kauffman_determinant",
    "verify_knot_type",
    "gauss_code",
    "LineSegment",
    "CircularArc",
    "HelicalArc",
    "PiecewiseCurve",
    "ReducedPartSpec",
    "build_tower",
    "fold_tower",
    "build_reduced",
    "part_length",
    "total_length",
    "MIN_TUBE_SCALE",
    "ClearanceAnalysis",
    "ThicknessReport",
    "compute_min_h",
    "crossing_clearance",
    "verify_taylor_minorant",
    "audit",
]

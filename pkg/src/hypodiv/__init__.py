"""Exact and numerical n-division points of rational hypocycloids."""
from .constructibility import (
    ConstructibilityVerdict,
    build_division_cubic,
    check_verdict,
    cubic_constructibility,
    gauss_wantzel,
    match_division_root,
    tricuspoid_division_constructible,
)
from .exact import factorize, format_rational, is_fermat_prime, padic_valuation, parse_rational
from .geometry import (
    ArcPosition,
    DivisionReport,
    HypocycloidShape,
    PlanePoint,
    arclength_cumulative,
    arclength_local,
    division_points,
    division_radius_sq_exact,
    invert_arclength,
    polar_radius,
    position,
    speed,
)
from .oracle import QuadratureResult, invert_arclength_numeric, quad_arclength, verify_division
from .polynomial import (
    NewtonPolygon,
    RationalPolynomial,
    irreducible_by_dumas,
    newton_polygon,
    rational_roots,
)

__version__ = "0.1.0"

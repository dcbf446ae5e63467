"""Closed-form-free checks: quadrature of the curve speed and bisection.

Nothing here uses the closed arclength formula. The integrand is the norm of
the derivative of the parametrization, and the domain is split at the cusps
(where the speed has a kink) before adaptive refinement.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .geometry import DivisionReport, HypocycloidShape, division_points

MAX_INTERVALS = 4096


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    subdivisions: int


@dataclass(frozen=True)
class VerificationReport:
    shape: HypocycloidShape
    n: int
    segments: tuple[float, ...]
    max_deviation: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tol


def _breakpoints(shape: HypocycloidShape, phi0: float, phi1: float) -> np.ndarray:
    cusps = [2 * math.pi * float(t) for t in shape.cusp_angles()]
    inner = [t for t in cusps if phi0 < t < phi1]
    return np.array([phi0, *inner, phi1], dtype=np.float64)


def quad_arclength(
    shape: HypocycloidShape, phi0: float, phi1: float, tol: float = 1e-10, backend=None
) -> QuadratureResult:
    """Arclength between two angles by adaptive Gauss-Kronrod quadrature."""
    period = shape.period
    slack = 1e-12 * period
    if not (tol > 0):
        raise ValueError("tol must be positive")
    if not (-slack <= phi0 <= phi1 <= period + slack):
        raise ValueError(f"need 0 <= phi0 <= phi1 <= {period!r}, got [{phi0!r}, {phi1!r}]")
    impl = backend or kernels
    value, err, m = impl.adaptive_speed_integral(
        float(shape.c) - 1.0, _breakpoints(shape, phi0, phi1), tol, MAX_INTERVALS
    )
    return QuadratureResult(float(value), float(err), int(m))


def invert_arclength_numeric(
    shape: HypocycloidShape, s: float, tol: float = 1e-10, backend=None
) -> float:
    """Angle at which the quadrature arclength from the base point equals ``s``."""
    total = float(shape.total_arclength())
    if not (tol > 0):
        raise ValueError("tol must be positive")
    if not (0 <= s <= total):
        raise ValueError(f"arclength {s!r} outside [0, {total!r}]")
    impl = backend or kernels
    qtol = min(1e-13, tol)
    return float(
        impl.invert_speed_integral(
            float(shape.c) - 1.0, _breakpoints(shape, 0.0, shape.period), float(s), tol, qtol, MAX_INTERVALS
        )
    )


def verify_division(
    shape: HypocycloidShape,
    n: int,
    tol: float = 1e-8,
    report: DivisionReport | None = None,
    backend=None,
) -> VerificationReport:
    """Measure every arc between consecutive division points by quadrature.

    The wraparound arc from point n (the base point) to point 1 is the first
    segment, starting at angle 0.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if not (tol > 0):
        raise ValueError("tol must be positive")
    report = report or division_points(shape, n)
    target = float(shape.total_arclength()) / n
    qtol = min(1e-12, tol * 1e-3)
    phis = [0.0] + [min(p.position.phi, shape.period) for p in report.points]
    segments = tuple(
        quad_arclength(shape, a, b, qtol, backend=backend).value for a, b in zip(phis, phis[1:])
    )
    dev = max(abs(seg - target) for seg in segments)
    return VerificationReport(shape, n, segments, dev, tol)

"""The scaled rational hypocycloid and its n-division points.

A shape is the ratio ``c = a/b`` in lowest terms: the curve has ``a`` cusps
and closes after the angle parameter runs over ``[0, 2*pi*b]``. Arclength
bookkeeping (totals, cusp-arc boundaries, targets ``d * total / n``) is done
in exact rationals; only the final angle and coordinates are floats.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import RationalLike, as_rational

_ANGLE_SLACK = 1e-12


@dataclass(frozen=True)
class HypocycloidShape:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError("a and b must be positive integers")
        if math.gcd(self.a, self.b) != 1:
            raise ValueError(f"a={self.a}, b={self.b} not in lowest terms")
        if self.a <= self.b:
            raise ValueError("a hypocycloid needs c = a/b > 1")

    @classmethod
    def from_ratio(cls, c: RationalLike | str) -> "HypocycloidShape":
        c = as_rational(c)
        return cls(c.numerator, c.denominator)

    @property
    def c(self) -> Fraction:
        return Fraction(self.a, self.b)

    @property
    def degenerate(self) -> bool:
        """c = 2 traces the segment [-2, 2] twice."""
        return self.a == 2 and self.b == 1

    @property
    def cusp_arc_length(self) -> Fraction:
        """Length 8(c-1)/c of the arc between consecutive cusps."""
        c = self.c
        return 8 * (c - 1) / c

    @property
    def cusp_angle(self) -> float:
        """Parameter span 2*pi/c of one cusp arc."""
        return 2 * math.pi * self.b / self.a

    @property
    def period(self) -> float:
        return 2 * math.pi * self.b

    def total_arclength(self) -> Fraction:
        return 8 * self.b * (self.c - 1)

    def cusp_angles(self) -> list[Fraction]:
        """Cusp parameters as exact multiples of 2*pi: k*b/a, k = 0..a."""
        return [Fraction(k * self.b, self.a) for k in range(self.a + 1)]

    def __str__(self):
        return f"{self.a}/{self.b}" if self.b != 1 else str(self.a)


@dataclass(frozen=True)
class PlanePoint:
    x: float
    y: float


@dataclass(frozen=True)
class ArcPosition:
    phi: float
    cusp_index: int
    local_phi: float
    local_arclength: Fraction


@dataclass(frozen=True)
class DivisionPoint:
    index: int
    position: ArcPosition
    point: PlanePoint
    r_squared: Fraction
    r: float


@dataclass(frozen=True)
class DivisionReport:
    shape: HypocycloidShape
    n: int
    points: tuple[DivisionPoint, ...]

    @property
    def degenerate(self) -> bool:
        return self.shape.degenerate

    @property
    def total_arclength(self) -> Fraction:
        return self.shape.total_arclength()


def position(shape: HypocycloidShape, phi: float) -> PlanePoint:
    """Curve point at angle ``phi``; the base point (c, 0) sits at phi = 0."""
    k = float(shape.c) - 1.0
    return PlanePoint(
        k * math.cos(phi) + math.cos(k * phi),
        k * math.sin(phi) - math.sin(k * phi),
    )


def sample_curve(shape: HypocycloidShape, phi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized :func:`position` for plotting."""
    k = float(shape.c) - 1.0
    phi = np.asarray(phi, dtype=np.float64)
    return k * np.cos(phi) + np.cos(k * phi), k * np.sin(phi) - np.sin(k * phi)


def polar_radius(shape: HypocycloidShape, phi: float) -> float:
    c = float(shape.c)
    r2 = c * c - 2 * c + 2 + 2 * (c - 1) * math.cos(c * phi)
    return math.sqrt(max(r2, 0.0))


def speed(shape: HypocycloidShape, phi: float) -> float:
    """|d(x, y)/dphi| = 2(c-1)|sin(c*phi/2)|; zero exactly at the cusps."""
    c = float(shape.c)
    return 2 * (c - 1) * abs(math.sin(c * phi / 2))


def _check_angle(phi: float, hi: float, what: str) -> float:
    if not math.isfinite(phi) or phi < -_ANGLE_SLACK * hi or phi > hi * (1 + _ANGLE_SLACK):
        raise ValueError(f"{what} angle {phi!r} outside [0, {hi!r}]")
    return min(max(phi, 0.0), hi)


def arclength_local(shape: HypocycloidShape, phi: float) -> float:
    """Arclength from the start of a cusp arc, for phi in [0, 2*pi/c]."""
    phi = _check_angle(phi, shape.cusp_angle, "local")
    c = float(shape.c)
    return float(shape.cusp_arc_length) * math.sin(c * phi / 4) ** 2


def arclength_cumulative(shape: HypocycloidShape, phi: float) -> float:
    """Arclength from the base point, for phi in [0, 2*pi*b]."""
    phi = _check_angle(phi, shape.period, "curve")
    span = shape.cusp_angle
    k = min(int(phi // span), shape.a - 1)
    local = min(max(phi - k * span, 0.0), span)
    return k * float(shape.cusp_arc_length) + arclength_local(shape, local)


def _local_angle(shape: HypocycloidShape, local_s: Fraction) -> float:
    # sin^2(c*phi/4) = ratio; atan2 keeps both ends of the arc well conditioned.
    ratio = local_s / shape.cusp_arc_length
    theta = math.atan2(math.sqrt(ratio), math.sqrt(1 - ratio))
    return 4 * theta * shape.b / shape.a


def invert_arclength(shape: HypocycloidShape, s: RationalLike) -> ArcPosition:
    """Exact cusp-arc selection and closed-form local inversion of arclength.

    Arcs are half-open ``[k*L, (k+1)*L)`` except the last, which is closed so
    that ``s = total`` lands on arc ``a - 1`` at its far cusp.
    """
    s = as_rational(s)
    total = shape.total_arclength()
    if s < 0 or s > total:
        raise ValueError(f"arclength {s} outside [0, {total}]")
    arc = shape.cusp_arc_length
    k = min(math.floor(s / arc), shape.a - 1)
    local_s = s - k * arc
    local_phi = _local_angle(shape, local_s)
    return ArcPosition(
        phi=k * shape.cusp_angle + local_phi,
        cusp_index=k,
        local_phi=local_phi,
        local_arclength=local_s,
    )


def radius_squared_at(shape: HypocycloidShape, local_s: Fraction) -> Fraction:
    """Exact squared polar radius at local arclength ``local_s`` on a cusp arc."""
    c = shape.c
    u = 1 + c * local_s / (4 - 4 * c)
    return c * c - 2 * c + 2 + 2 * (c - 1) * (2 * u * u - 1)


def division_radius_sq_exact(shape: HypocycloidShape, n: int, d: int) -> Fraction:
    """Exact r**2 of the d-th n-division point (d = n is the base point)."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    if not 1 <= d <= n:
        raise ValueError(f"division index {d} outside 1..{n}")
    pos = invert_arclength(shape, Fraction(d, n) * shape.total_arclength())
    return radius_squared_at(shape, pos.local_arclength)


def division_points(shape: HypocycloidShape, n: int) -> DivisionReport:
    if n < 1:
        raise ValueError("n must be a positive integer")
    total = shape.total_arclength()
    points = []
    for d in range(1, n + 1):
        pos = invert_arclength(shape, Fraction(d, n) * total)
        pt = position(shape, pos.phi)
        points.append(
            DivisionPoint(
                index=d,
                position=pos,
                point=pt,
                r_squared=radius_squared_at(shape, pos.local_arclength),
                r=math.hypot(pt.x, pt.y),
            )
        )
    return DivisionReport(shape=shape, n=n, points=tuple(points))

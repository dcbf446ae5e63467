"""SVG drawings of a hypocycloid with its division points."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .geometry import HypocycloidShape, division_points, sample_curve


@dataclass(frozen=True)
class RenderSpec:
    shape: HypocycloidShape
    n: Optional[int] = None
    width: int = 600
    height: int = 600
    show_circumcircle: bool = True
    show_division_circles: bool = False
    samples: int = 720

    def __post_init__(self):
        if self.samples < 64:
            raise ValueError("samples must be >= 64")
        if self.width < 100 or self.height < 100:
            raise ValueError("width and height must be >= 100 pixels")
        if self.n is not None and self.n < 1:
            raise ValueError("n must be a positive integer")

    @property
    def scale(self) -> float:
        """Pixels per curve unit; the view spans [-1.2c, 1.2c]."""
        return min(self.width, self.height) / (2.4 * float(self.shape.c))


def _f(x: float, digits: int = 6) -> str:
    text = f"{x:.{digits}f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def render_svg(spec: RenderSpec) -> str:
    shape = spec.shape
    s = spec.scale
    half = 1.2 * float(shape.c) * s
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" height="{spec.height}" '
        f'viewBox="{_f(-half)} {_f(-half)} {_f(2 * half)} {_f(2 * half)}">',
        f"  <title>hypocycloid c={shape}" + (f", n={spec.n}" if spec.n else "") + "</title>",
    ]
    if spec.show_circumcircle:
        lines.append(
            f'  <circle class="circumcircle" cx="0" cy="0" r="{_f(float(shape.c) * s)}" '
            'fill="none" stroke="#888888" stroke-width="1" stroke-dasharray="6 4"/>'
        )
    phi = np.linspace(0.0, shape.period, spec.samples * shape.b + 1)
    xs, ys = sample_curve(shape, phi)
    pts = " ".join(f"{_f(x * s, 3)},{_f(-y * s, 3)}" for x, y in zip(xs, ys))
    lines.append(f'  <polyline class="curve" fill="none" stroke="#000000" stroke-width="2" points="{pts}"/>')
    if spec.n:
        report = division_points(shape, spec.n)
        if spec.show_division_circles:
            for p in report.points:
                r = math.sqrt(p.r_squared.numerator / p.r_squared.denominator)
                lines.append(
                    f'  <circle class="construction" data-index="{p.index}" cx="0" cy="0" r="{_f(r * s)}" '
                    'fill="none" stroke="#3366cc" stroke-width="0.75"/>'
                )
        for p in report.points:
            lines.append(
                f'  <circle class="division-point" data-index="{p.index}" cx="{_f(p.point.x * s)}" '
                f'cy="{_f(-p.point.y * s)}" r="4" fill="#cc2222"/>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"

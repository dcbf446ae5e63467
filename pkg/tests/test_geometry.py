import math
import random
from fractions import Fraction

import numpy as np
import pytest
from scipy.integrate import quad

from conftest import STANDARD_SHAPES
from hypodiv.geometry import (
    HypocycloidShape,
    arclength_cumulative,
    arclength_local,
    division_points,
    division_radius_sq_exact,
    invert_arclength,
    polar_radius,
    position,
    sample_curve,
    speed,
)

DELTOID = HypocycloidShape(3, 1)
ASTROID = HypocycloidShape(4, 1)
FIVE_HALVES = HypocycloidShape(5, 2)
SQRT3 = math.sqrt(3)


def _parametric_speed(shape, phi):
    k = float(shape.c) - 1
    dx = -k * math.sin(phi) - k * math.sin(k * phi)
    dy = k * math.cos(phi) - k * math.cos(k * phi)
    return math.hypot(dx, dy)


class TestShape:
    def test_ratio_and_counts(self):
        s = HypocycloidShape.from_ratio("7/3")
        assert (s.a, s.b, s.c) == (7, 3, Fraction(7, 3))
        assert s.total_arclength() == Fraction(32)
        assert s.cusp_arc_length * s.a == s.total_arclength()

    @pytest.mark.parametrize("a, b", [(4, 2), (3, 3), (2, 3), (0, 1)])
    def test_rejects_bad_shapes(self, a, b):
        with pytest.raises(ValueError):
            HypocycloidShape(a, b)

    def test_from_ratio_reduces(self):
        assert HypocycloidShape.from_ratio(Fraction(10, 4)) == FIVE_HALVES

    def test_degenerate_flag(self):
        assert HypocycloidShape(2, 1).degenerate
        assert not DELTOID.degenerate

    def test_total_arclength_formula(self, shape):
        assert shape.total_arclength() == 8 * shape.b * (shape.c - 1)


class TestPointwise:
    @pytest.mark.parametrize(
        "shape, phi, expected",
        [
            (DELTOID, 0.0, (3.0, 0.0)),
            (DELTOID, 2 * math.pi / 3, (-1.5, 1.5 * SQRT3)),
            (FIVE_HALVES, 2 * math.pi, (0.5, 0.0)),
        ],
    )
    def test_position(self, shape, phi, expected):
        p = position(shape, phi)
        assert p.x == pytest.approx(expected[0], abs=1e-14)
        assert p.y == pytest.approx(expected[1], abs=1e-14)

    @pytest.mark.parametrize(
        "shape, phi, expected",
        [(DELTOID, 0.0, 3.0), (DELTOID, 2 * math.pi / 3, 3.0), (ASTROID, math.pi / 4, 2.0)],
    )
    def test_polar_radius(self, shape, phi, expected):
        assert polar_radius(shape, phi) == pytest.approx(expected, abs=1e-14)
        p = position(shape, phi)
        assert math.hypot(p.x, p.y) == pytest.approx(expected, abs=1e-14)

    @pytest.mark.parametrize(
        "shape, phi, expected",
        [(DELTOID, 0.0, 0.0), (DELTOID, math.pi / 3, 4.0), (FIVE_HALVES, 2 * math.pi / 5, 3.0)],
    )
    def test_speed(self, shape, phi, expected):
        assert speed(shape, phi) == pytest.approx(expected, abs=1e-14)

    def test_speed_vanishes_at_cusps(self, shape):
        for k in range(shape.a + 1):
            assert speed(shape, k * shape.cusp_angle) == pytest.approx(0.0, abs=1e-13)

    def test_norm_consistency(self):
        rng = random.Random(1)
        for _ in range(1000):
            shape = rng.choice(STANDARD_SHAPES)
            phi = rng.uniform(0, shape.period)
            p = position(shape, phi)
            assert math.hypot(p.x, p.y) == pytest.approx(polar_radius(shape, phi), abs=1e-12)

    def test_speed_matches_parametric_derivative(self, shape):
        for phi in np.linspace(0, shape.period, 101):
            assert speed(shape, phi) == pytest.approx(_parametric_speed(shape, phi), abs=1e-7)

    def test_sample_curve_matches_position(self, shape):
        phis = np.linspace(0, shape.period, 17)
        xs, ys = sample_curve(shape, phis)
        for phi, x, y in zip(phis, xs, ys):
            p = position(shape, phi)
            assert (x, y) == pytest.approx((p.x, p.y), abs=1e-15)


class TestArclength:
    @pytest.mark.parametrize(
        "phi, expected", [(0.0, 0.0), (2 * math.pi / 3, 16 / 3), (math.pi / 3, 8 / 3)]
    )
    def test_local(self, phi, expected):
        assert arclength_local(DELTOID, phi) == pytest.approx(expected, abs=1e-14)

    def test_local_out_of_range(self):
        with pytest.raises(ValueError):
            arclength_local(DELTOID, 2.2)
        with pytest.raises(ValueError):
            arclength_local(DELTOID, -0.1)

    @pytest.mark.parametrize(
        "shape, phi, expected",
        [(DELTOID, 2 * math.pi, 16.0), (DELTOID, math.pi, 8.0), (FIVE_HALVES, 4 * math.pi, 24.0)],
    )
    def test_cumulative(self, shape, phi, expected):
        assert arclength_cumulative(shape, phi) == pytest.approx(expected, abs=1e-13)

    def test_cumulative_out_of_range(self):
        with pytest.raises(ValueError):
            arclength_cumulative(DELTOID, 7.0)
        with pytest.raises(ValueError):
            arclength_cumulative(DELTOID, float("nan"))

    def test_cumulative_monotone(self, shape):
        vals = [arclength_cumulative(shape, phi) for phi in np.linspace(0, shape.period, 2001)]
        assert all(b >= a for a, b in zip(vals, vals[1:]))
        assert vals[-1] == pytest.approx(float(shape.total_arclength()), abs=1e-12)

    def test_speed_is_derivative_of_arclength(self, shape):
        h = 1e-6
        rng = random.Random(7)
        cusps = [k * shape.cusp_angle for k in range(shape.a + 1)]
        checked = 0
        while checked < 50:
            phi = rng.uniform(h, shape.period - h)
            if min(abs(phi - t) for t in cusps) < 1e-3:
                continue
            fd = (arclength_cumulative(shape, phi + h) - arclength_cumulative(shape, phi - h)) / (2 * h)
            assert fd == pytest.approx(speed(shape, phi), abs=1e-6)
            checked += 1

    def test_closed_form_against_scipy_quad(self, shape):
        cusps = [k * shape.cusp_angle for k in range(shape.a + 1)]
        for phi in np.linspace(0, shape.period, 25):
            pts = [t for t in cusps if 0 < t < phi]
            val, _ = quad(lambda t: _parametric_speed(shape, t), 0, phi, points=pts or None, epsabs=1e-13, limit=200)
            assert arclength_cumulative(shape, phi) == pytest.approx(val, abs=1e-10)


class TestInversion:
    @pytest.mark.parametrize(
        "shape, s, phi, cusp, local",
        [
            (DELTOID, 0, 0.0, 0, Fraction(0)),
            (DELTOID, 8, math.pi, 1, Fraction(8, 3)),
            (FIVE_HALVES, 12, 2 * math.pi, 2, Fraction(12, 5)),
        ],
    )
    def test_examples(self, shape, s, phi, cusp, local):
        pos = invert_arclength(shape, s)
        assert pos.phi == pytest.approx(phi, abs=1e-13)
        assert pos.cusp_index == cusp
        assert pos.local_arclength == local

    def test_end_of_curve_stays_on_last_arc(self, shape):
        pos = invert_arclength(shape, shape.total_arclength())
        assert pos.cusp_index == shape.a - 1
        assert pos.local_arclength == shape.cusp_arc_length
        assert pos.phi == pytest.approx(shape.period, rel=1e-15)

    def test_interior_cusp_starts_next_arc(self):
        pos = invert_arclength(DELTOID, Fraction(16, 3))
        assert (pos.cusp_index, pos.local_arclength) == (1, 0)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            invert_arclength(DELTOID, Fraction(-1, 10**9))
        with pytest.raises(ValueError):
            invert_arclength(DELTOID, Fraction(16 * 10**9 + 1, 10**9))

    def test_rejects_float(self):
        with pytest.raises(TypeError):
            invert_arclength(DELTOID, 8.0)

    def test_round_trip(self, shape):
        rng = random.Random(3)
        total = shape.total_arclength()
        for _ in range(100):
            s = total * Fraction(rng.randrange(0, 10**6 + 1), 10**6)
            pos = invert_arclength(shape, s)
            assert arclength_cumulative(shape, pos.phi) == pytest.approx(float(s), abs=1e-10)
            assert pos.phi == pytest.approx(pos.cusp_index * shape.cusp_angle + pos.local_phi, abs=1e-12)
            assert 0 <= pos.local_arclength <= shape.cusp_arc_length
            assert 0 <= pos.cusp_index < shape.a


class TestDivision:
    @pytest.mark.parametrize(
        "shape, n, d, expected",
        [
            (DELTOID, 5, 1, Fraction(33, 25)),
            (DELTOID, 1, 1, Fraction(9)),
            (DELTOID, 3, 1, Fraction(9)),
            (DELTOID, 5, 2, Fraction(97, 25)),
        ],
    )
    def test_radius_squared(self, shape, n, d, expected):
        assert division_radius_sq_exact(shape, n, d) == expected

    def test_tricuspoid_radius_formula(self):
        # r^2 of the first point, n >= 3, is (9n^2 - 96n + 288)/n^2.
        for n in range(3, 200):
            assert division_radius_sq_exact(DELTOID, n, 1) == Fraction(9 * n * n - 96 * n + 288, n * n)

    @pytest.mark.parametrize("d", [0, 6])
    def test_radius_index_range(self, d):
        with pytest.raises(ValueError):
            division_radius_sq_exact(DELTOID, 5, d)

    def test_three_cusps(self):
        pts = [(p.point.x, p.point.y) for p in division_points(DELTOID, 3).points]
        expected = [(-1.5, 1.5 * SQRT3), (-1.5, -1.5 * SQRT3), (3.0, 0.0)]
        for got, want in zip(pts, expected):
            assert got == pytest.approx(want, abs=1e-12)

    def test_halves(self):
        pts = [(p.point.x, p.point.y) for p in division_points(DELTOID, 2).points]
        assert pts[0] == pytest.approx((-1.0, 0.0), abs=1e-12)
        assert pts[1] == pytest.approx((3.0, 0.0), abs=1e-12)

    def test_first_sixth(self):
        p = division_points(DELTOID, 6).points[0].point
        assert (p.x, p.y) == pytest.approx((0.5, SQRT3 / 2), abs=1e-12)

    def test_five_halves_halves(self):
        pts = [(p.point.x, p.point.y) for p in division_points(FIVE_HALVES, 2).points]
        assert pts[0] == pytest.approx((0.5, 0.0), abs=1e-12)
        assert pts[1] == pytest.approx((2.5, 0.0), abs=1e-12)

    @pytest.mark.parametrize("n", [1, 2, 5, 7, 12, 31])
    def test_report_invariants(self, shape, n):
        report = division_points(shape, n)
        assert len(report.points) == n
        total = shape.total_arclength()
        arc = shape.cusp_arc_length
        for p in report.points:
            cum = p.position.cusp_index * arc + p.position.local_arclength
            assert cum == Fraction(p.index, n) * total
            exact_r = math.sqrt(p.r_squared)
            assert p.r == pytest.approx(exact_r, rel=1e-12)
            assert p.r * p.r == pytest.approx(float(p.r_squared), rel=1e-12)
        last = report.points[-1].point
        assert (last.x, last.y) == pytest.approx((float(shape.c), 0.0), abs=1e-9)

    @pytest.mark.parametrize("n", [3, 4, 7, 10])
    def test_mirror_symmetry(self, shape, n):
        pts = [(p.point.x, p.point.y) for p in division_points(shape, n).points]
        for x, y in pts:
            assert min(math.hypot(x - u, -y - v) for u, v in pts) < 1e-9

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 8, 9])
    def test_degenerate_segment(self, n):
        shape = HypocycloidShape(2, 1)
        report = division_points(shape, n)
        assert report.degenerate
        assert report.total_arclength == 8
        for p in report.points:
            assert abs(p.point.y) <= 1e-12
            assert -2 - 1e-12 <= p.point.x <= 2 + 1e-12
            assert p.r == pytest.approx(math.sqrt(p.r_squared), abs=1e-12)

    def test_rejects_bad_n(self):
        with pytest.raises(ValueError):
            division_points(DELTOID, 0)

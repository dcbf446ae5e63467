"""Dense univariate polynomials over Q, Newton polygons and cubic factoring."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Sequence

from .exact import (
    RationalLike,
    divisors,
    format_rational,
    is_prime,
    lcm_of_denominators,
    padic_valuation,
)


class RationalPolynomial:
    """Immutable polynomial; ``coefficients[i]`` multiplies ``x**i``.

    Trailing zeros are stripped, so the zero polynomial has no coefficients
    and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[RationalLike | str] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike], lead: RationalLike = 1) -> "RationalPolynomial":
        p = cls([lead])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def is_zero(self) -> bool:
        return not self._coeffs

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction input, float otherwise."""
        if isinstance(x, (int, Fraction)):
            acc, coeffs = Fraction(0), self._coeffs
        else:
            acc, coeffs = 0.0, [float(c) for c in self._coeffs]
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, RationalPolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return RationalPolynomial(
            a + b for a, b in zip_longest(self._coeffs, other._coeffs, fillvalue=Fraction(0))
        )

    def __neg__(self):
        return RationalPolynomial(-c for c in self._coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial(c * other for c in self._coeffs)
        if self.is_zero() or other.is_zero():
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = RationalPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, divisor: "RationalPolynomial") -> tuple["RationalPolynomial", "RationalPolynomial"]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dd = divisor.degree
        lead = divisor.leading
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for i in range(len(rem) - dd - 1, -1, -1):
            q = rem[i + dd] / lead
            quot[i] = q
            if q:
                for j, b in enumerate(divisor._coeffs):
                    rem[i + j] -= q * b
        return RationalPolynomial(quot), RationalPolynomial(rem[:dd])

    def integer_form(self) -> tuple[Fraction, "RationalPolynomial"]:
        """Split as ``unit * primitive`` with integer, content-free, positive-leading part."""
        if self.is_zero():
            raise ValueError("zero polynomial has no primitive form")
        den = lcm_of_denominators(self._coeffs)
        ints = [int(c * den) for c in self._coeffs]
        g = math.gcd(*ints)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), RationalPolynomial(i // g for i in ints)

    def cleared(self) -> "RationalPolynomial":
        """Multiply through by the common denominator (content is kept)."""
        den = lcm_of_denominators(self._coeffs)
        return self * den

    def __repr__(self):
        return f"RationalPolynomial([{', '.join(format_rational(c) for c in self._coeffs)}])"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = "" if (mag == 1 and i > 0) else format_rational(mag)
            if i > 0:
                body += ("*" if body else "") + ("x" if i == 1 else f"x^{i}")
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


@dataclass(frozen=True)
class NewtonPolygon:
    prime: int
    points: tuple[tuple[int, int], ...]
    vertices: tuple[tuple[int, int], ...]
    segments: tuple[tuple[Fraction, int], ...]  # (slope, horizontal length)

    def lies_on_or_above(self, i: int, v: int | float) -> bool:
        if len(self.vertices) == 1:
            x0, y0 = self.vertices[0]
            return i == x0 and v >= y0
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:]):
            if x0 <= i <= x1:
                return v >= y0 + Fraction(y1 - y0, x1 - x0) * (i - x0)
        return False


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(poly: RationalPolynomial, p: int) -> NewtonPolygon:
    """Lower convex hull of ``(i, v_p(a_i))`` after clearing denominators."""
    if poly.is_zero():
        raise ValueError("the zero polynomial has no Newton polygon")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    coeffs = poly.cleared().coefficients
    pts = tuple((i, padic_valuation(a, p)) for i, a in enumerate(coeffs) if a != 0)
    hull: list[tuple[int, int]] = []
    for pt in pts:
        # Pop on collinear too, so every kept vertex is a genuine slope change.
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    segments = tuple(
        (Fraction(y1 - y0, x1 - x0), x1 - x0) for (x0, y0), (x1, y1) in zip(hull, hull[1:])
    )
    return NewtonPolygon(p, pts, tuple(hull), segments)


def irreducible_by_dumas(poly: RationalPolynomial, p: int) -> bool | None:
    """Eisenstein-Dumas test at ``p``: True if it proves irreducibility, else None.

    ``None`` means the test is silent, not that ``poly`` factors.
    """
    if poly.degree < 2:
        raise ValueError("Dumas criterion needs degree >= 2")
    if poly.coefficients[0] == 0:
        raise ValueError("constant term is zero; divide out x first")
    polygon = newton_polygon(poly, p)
    if len(polygon.segments) != 1:
        return None
    slope, _ = polygon.segments[0]
    return True if slope.denominator == poly.degree else None


def rational_root_candidates(poly: RationalPolynomial) -> list[Fraction]:
    """Every +-u/v with u | constant term and v | leading term of the integer form."""
    _, prim = poly.integer_form()
    c0 = next(c for c in prim.coefficients if c != 0)
    nums = divisors(int(c0))
    dens = divisors(int(prim.leading))
    cands = {Fraction(sign * u, v) for u in nums for v in dens for sign in (1, -1)}
    return sorted(cands)


def _is_root(ints: Sequence[int], num: int, den: int) -> bool:
    # den**deg * f(num/den), by homogeneous Horner in integers.
    acc = 0
    den_pow = 1
    for a in reversed(ints):
        acc = acc * num + a * den_pow
        den_pow *= den
    return acc == 0


def _divide_linear(ints: list[int], num: int, den: int) -> list[int]:
    # Exact quotient by (den*x - num); integral by Gauss's lemma.
    q = [0] * (len(ints) - 1)
    q[-1] = ints[-1] // den
    for i in range(len(ints) - 2, 0, -1):
        q[i - 1] = (ints[i] + num * q[i]) // den
    return q


def _peel_rational_roots(poly: RationalPolynomial) -> tuple[list[Fraction], list[int]]:
    """Rational roots (with multiplicity) and the primitive integer cofactor."""
    if poly.is_zero():
        raise ValueError("the zero polynomial has every number as a root")
    ints = [int(c) for c in poly.integer_form()[1].coefficients]
    roots: list[Fraction] = []
    while len(ints) > 1 and ints[0] == 0:
        roots.append(Fraction(0))
        ints = ints[1:]
    if len(ints) == 1:
        return roots, ints
    bound = 1 + max(Fraction(abs(a), ints[-1]) for a in ints[:-1])
    dens = divisors(ints[-1])
    for u in divisors(ints[0]):
        for v in dens:
            if Fraction(u, v) > bound or math.gcd(u, v) != 1:
                continue
            for num in (u, -u):
                while len(ints) > 1 and _is_root(ints, num, v):
                    roots.append(Fraction(num, v))
                    ints = _divide_linear(ints, num, v)
    return roots, ints


def rational_roots(poly: RationalPolynomial) -> list[Fraction]:
    """All rational roots with multiplicity, ascending.

    Candidates come from the rational root theorem, pruned by the Cauchy
    bound and tested in exact integer arithmetic.
    """
    return sorted(_peel_rational_roots(poly)[0])


@dataclass(frozen=True)
class Factorization:
    """``unit * prod(factor ** multiplicity)``, factors primitive over Z."""

    unit: Fraction
    factors: tuple[tuple[RationalPolynomial, int], ...]

    def expand(self) -> RationalPolynomial:
        out = RationalPolynomial([self.unit])
        for f, m in self.factors:
            out = out * f**m
        return out

    def __str__(self):
        parts = [format_rational(self.unit)] if self.unit != 1 else []
        for f, m in self.factors:
            s = f"({f})"
            parts.append(s if m == 1 else f"{s}^{m}")
        return "*".join(parts) or "1"


def linear_factor(root: Fraction) -> RationalPolynomial:
    """Primitive integer linear factor ``den*x - num`` vanishing at ``root``."""
    return RationalPolynomial([-root.numerator, root.denominator])


def split_rational_roots(poly: RationalPolynomial) -> Factorization:
    """Pull out every rational root as a linear factor; any remainder has none."""
    roots, rest = _peel_rational_roots(poly)
    grouped: dict[Fraction, int] = {}
    for r in roots:
        grouped[r] = grouped.get(r, 0) + 1
    factors = [(linear_factor(r), m) for r, m in grouped.items()]
    if len(rest) > 1:
        factors.append((RationalPolynomial(rest), 1))
    lead = Fraction(rest[-1])
    for f, m in factors[: len(grouped)]:
        lead *= f.leading**m
    factors.sort(key=lambda fm: (fm[0].degree, fm[0].coefficients))
    return Factorization(poly.leading / lead, tuple(factors))

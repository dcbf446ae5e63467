"""Straightedge-and-compass verdicts with re-checkable witnesses.

Two classifiers live here: regular n-gons (Gauss-Wantzel) and the n-division
points of the tricuspoid drawn from scratch. The latter goes through the
cubic ``f_n`` whose real root is the x-coordinate of the first division point.
Every verdict carries a witness that :func:`check_verdict` re-derives without
calling the classifier.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .exact import RationalLike, as_rational, divisors, factorize, is_fermat_prime, is_prime, padic_valuation
from .geometry import HypocycloidShape, invert_arclength, position
from .polynomial import (
    Factorization,
    NewtonPolygon,
    RationalPolynomial,
    irreducible_by_dumas,
    newton_polygon,
    rational_root_candidates,
    split_rational_roots,
)

TRICUSPOID = HypocycloidShape(3, 1)

# Exact coordinates of the division points available without f_n.
_SMALL_DIVISION_POINTS = {
    1: ((Fraction(3), Fraction(0)),),
    2: ((Fraction(-1), Fraction(0)), (Fraction(3), Fraction(0))),
}


@dataclass(frozen=True)
class FactorizationWitness:
    poly: RationalPolynomial
    factorization: Factorization


@dataclass(frozen=True)
class DumasCertificate:
    poly: RationalPolynomial
    prime: int
    polygon: NewtonPolygon

    @property
    def slope(self) -> Fraction:
        return self.polygon.segments[0][0]


@dataclass(frozen=True)
class RationalRootExhaustion:
    """A cubic with none of these candidates as a root is irreducible over Q."""

    poly: RationalPolynomial
    candidates: tuple[Fraction, ...]


@dataclass(frozen=True)
class ReductionChain:
    """``chain[i+1]`` divides ``chain[i]``; the last entry's points are not constructible."""

    chain: tuple[int, ...]
    terminal: Union[DumasCertificate, RationalRootExhaustion]


@dataclass(frozen=True)
class DirectPoints:
    """Exact rational coordinates of every division point."""

    n: int
    points: tuple[tuple[Fraction, Fraction], ...]


@dataclass(frozen=True)
class GaussWantzelWitness:
    n: int
    factors: tuple[tuple[int, int], ...]


Witness = Union[
    FactorizationWitness,
    DumasCertificate,
    RationalRootExhaustion,
    ReductionChain,
    DirectPoints,
    GaussWantzelWitness,
]


@dataclass(frozen=True)
class ConstructibilityVerdict:
    subject: str  # "cubic", "tricuspoid" or "circle"
    n: Fraction | None
    constructible: bool
    witness: Witness


def build_division_cubic(n: RationalLike | str) -> RationalPolynomial:
    """The cubic ``f_n`` whose real root is the first n-division x-coordinate.

    Defined for rational n >= 3 only: smaller n puts the first division point
    past the first cusp, where the derivation does not apply.

    >>> build_division_cubic(5)
    RationalPolynomial([117, -2475, 0, 2500])
    """
    n = as_rational(n)
    if n < 3:
        raise ValueError(
            f"f_n is only defined for n >= 3 (first division point must lie on the first cusp arc), got {n}"
        )
    a3 = 4 * n**4
    a1 = -(27 * n**4 - 288 * n**3 + 864 * n**2)
    a0 = -(27 * n**4 - 432 * n**3 + 2448 * n**2 - 6912 * n + 10368)
    return RationalPolynomial([a0, a1, 0, a3])


def _other_witness_primes(poly: RationalPolynomial):
    _, prim = poly.integer_form()
    seen = {3}
    for c in (prim.coefficients[0], prim.leading):
        for p, _ in factorize(abs(int(c))):
            if p not in seen:
                seen.add(p)
                yield p


def _dumas_verdict(poly: RationalPolynomial, p: int) -> ConstructibilityVerdict | None:
    if irreducible_by_dumas(poly, p):
        return ConstructibilityVerdict("cubic", None, False, DumasCertificate(poly, p, newton_polygon(poly, p)))
    return None


def cubic_constructibility(poly: RationalPolynomial) -> ConstructibilityVerdict:
    """Decide whether the real roots of a rational cubic are constructible.

    They are iff the cubic has a rational root: otherwise it is irreducible
    and every root has degree 3 over Q. A Dumas certificate at 3 is tried
    first since it rules out rational roots outright.
    """
    if poly.degree != 3:
        raise ValueError(f"expected a cubic, got degree {poly.degree}")
    if poly.coefficients[0] != 0:
        found = _dumas_verdict(poly, 3)
        if found:
            return found
    fact = split_rational_roots(poly)
    if any(f.degree == 1 for f, _ in fact.factors):
        return ConstructibilityVerdict("cubic", None, True, FactorizationWitness(poly, fact))
    for p in _other_witness_primes(poly):
        found = _dumas_verdict(poly, p)
        if found:
            return found
    return ConstructibilityVerdict(
        "cubic", None, False, RationalRootExhaustion(poly, tuple(rational_root_candidates(poly)))
    )


def _split_three(n: int) -> tuple[int, int]:
    e = 0
    while n % 3 == 0:
        n //= 3
        e += 1
    return e, n


def _division_cubic_verdict(n: int) -> ConstructibilityVerdict:
    v = cubic_constructibility(build_division_cubic(n))
    return ConstructibilityVerdict("tricuspoid", Fraction(n), v.constructible, v.witness)


def tricuspoid_division_constructible(n: int) -> ConstructibilityVerdict:
    """Are the n-division points of the undrawn tricuspoid constructible?"""
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n in _SMALL_DIVISION_POINTS:
        return ConstructibilityVerdict(
            "tricuspoid", Fraction(n), True, DirectPoints(n, _SMALL_DIVISION_POINTS[n])
        )
    e, m = _split_three(n)
    if n in (3, 6) or e == 0:
        return _division_cubic_verdict(n)
    # The m-division (resp. 9-division) points are among the n-division points.
    target = m if m > 2 else 9
    if target == n:
        return _division_cubic_verdict(n)
    sub = _division_cubic_verdict(target)
    if sub.constructible:
        raise AssertionError(f"reduction target {target} unexpectedly constructible")
    return ConstructibilityVerdict(
        "tricuspoid", Fraction(n), False, ReductionChain((n, target), sub.witness)
    )


def gauss_wantzel(n: int) -> ConstructibilityVerdict:
    """Regular n-gon test: n = 2^k times distinct Fermat primes."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    factors = tuple(factorize(n))
    ok = all(p == 2 or (e == 1 and is_fermat_prime(p)) for p, e in factors)
    return ConstructibilityVerdict("circle", Fraction(n), ok, GaussWantzelWitness(n, factors))


# -- independent re-verification -------------------------------------------


_FERMAT_NUMBERS = frozenset(2 ** (2**k) + 1 for k in range(7))


def _on_tricuspoid(x: Fraction, y: Fraction) -> bool:
    # Implicit deltoid with cusps on the circle of radius 3.
    r2 = x * x + y * y
    return r2 * r2 + 18 * r2 - 27 == 8 * (x**3 - 3 * x * y * y)


def _check_dumas(w: DumasCertificate) -> bool:
    poly = w.poly
    den = 1
    for c in poly.coefficients:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in poly.coefficients]
    deg = len(ints) - 1
    if deg < 2 or ints[0] == 0 or not is_prime(w.prime):
        return False
    v = [padic_valuation(a, w.prime) if a else None for a in ints]
    slope = Fraction(v[deg] - v[0], deg)
    if slope.denominator != deg:
        return False
    return all(vi is None or vi >= v[0] + slope * i for i, vi in enumerate(v))


def _check_exhaustion(w: RationalRootExhaustion) -> bool:
    poly = w.poly
    if poly.degree not in (2, 3):
        return False
    ints = poly.integer_form()[1].coefficients
    if ints[0] == 0:
        return False
    needed = {
        Fraction(s * u, v) for u in divisors(int(ints[0])) for v in divisors(int(ints[-1])) for s in (1, -1)
    }
    return needed <= set(w.candidates) and all(poly(q) != 0 for q in needed)


def _check_negative_cubic(w, n: Fraction | None) -> bool:
    if n is not None and w.poly != build_division_cubic(n):
        return False
    if isinstance(w, DumasCertificate):
        return _check_dumas(w)
    if isinstance(w, RationalRootExhaustion):
        return _check_exhaustion(w)
    return False


def check_verdict(verdict: ConstructibilityVerdict) -> bool:
    """Re-derive a verdict from its witness alone."""
    w = verdict.witness
    if isinstance(w, GaussWantzelWitness):
        prod = 1
        for p, e in w.factors:
            if not is_prime(p):
                return False
            prod *= p**e
        if prod != w.n or Fraction(w.n) != verdict.n:
            return False
        ok = all(p == 2 or (e == 1 and p in _FERMAT_NUMBERS and is_prime(p)) for p, e in w.factors)
        return ok == verdict.constructible
    if isinstance(w, DirectPoints):
        return (
            verdict.constructible
            and verdict.subject == "tricuspoid"
            and Fraction(w.n) == verdict.n
            and len(w.points) == w.n
            and all(_on_tricuspoid(x, y) for x, y in w.points)
        )
    if isinstance(w, FactorizationWitness):
        if verdict.subject == "tricuspoid" and w.poly != build_division_cubic(verdict.n):
            return False
        has_linear = any(f.degree == 1 for f, _ in w.factorization.factors)
        return verdict.constructible and has_linear and w.factorization.expand() == w.poly
    if isinstance(w, ReductionChain):
        chain = w.chain
        if verdict.constructible or len(chain) < 2 or Fraction(chain[0]) != verdict.n:
            return False
        if any(b < 3 or a % b for a, b in zip(chain, chain[1:])):
            return False
        return _check_negative_cubic(w.terminal, Fraction(chain[-1]))
    if isinstance(w, (DumasCertificate, RationalRootExhaustion)):
        n = verdict.n if verdict.subject == "tricuspoid" else None
        return not verdict.constructible and _check_negative_cubic(w, n)
    return False


# -- matching roots of f_n to the geometry ----------------------------------


def first_division_x(n: int) -> float:
    """Float x-coordinate of the first n-division point of the tricuspoid."""
    pos = invert_arclength(TRICUSPOID, TRICUSPOID.total_arclength() / n)
    return position(TRICUSPOID, pos.phi).x


def real_roots(poly: RationalPolynomial) -> list[Fraction | float]:
    """Real roots: exact where rational, floats for the irrational rest."""
    fact = split_rational_roots(poly)
    out: list[Fraction | float] = []
    for f, m in fact.factors:
        if f.degree == 1:
            out += [Fraction(-f.coefficients[0], f.coefficients[1])] * m
        else:
            coeffs = [float(c) for c in reversed(f.coefficients)]
            for z in np.roots(coeffs):
                if abs(z.imag) <= 1e-9 * max(1.0, abs(z.real)):
                    out += [float(z.real)] * m
    return sorted(out)


def match_division_root(n: int, tie_tol: float = 1e-9) -> Fraction | float:
    """The root of ``f_n`` that is the first division point's x-coordinate.

    ``f_n`` comes from squaring, so it carries extraneous roots; pick the one
    closest to the geometric coordinate.
    """
    x = first_division_x(n)
    roots = sorted(set(real_roots(build_division_cubic(n))), key=lambda r: (abs(float(r) - x), r))
    if len(roots) > 1:
        d0, d1 = abs(float(roots[0]) - x), abs(float(roots[1]) - x)
        if d1 - d0 <= tie_tol and abs(float(roots[0]) - float(roots[1])) > tie_tol:
            raise ValueError(f"ambiguous root match for n={n}: {roots[0]} vs {roots[1]}")
    return roots[0]

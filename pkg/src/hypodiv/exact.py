"""Exact rationals, p-adic valuations and small trial-division number theory.

Rationals are plain :class:`fractions.Fraction` values, which are always held
in lowest terms with a positive denominator.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]

#: Valuation of zero.
INFINITE_VALUATION = math.inf


def as_rational(value: RationalLike | str) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction.

    Floats are rejected: they would silently smuggle rounding into exact code.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"expected an exact rational, got {type(value).__name__}")
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational literal")
    num, sep, den = text.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
    if d == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def format_rational(q: RationalLike) -> str:
    """Serialize as ``"num/den"``, or ``"num"`` when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def _int_valuation(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_valuation(q: RationalLike, p: int) -> int | float:
    """Exponent of the prime ``p`` in ``q``; ``INFINITE_VALUATION`` for zero.

    >>> padic_valuation(117, 3)
    2
    >>> padic_valuation(Fraction(5, 18), 3)
    -2
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    q = Fraction(q)
    if q == 0:
        return INFINITE_VALUATION
    return _int_valuation(q.numerator, p) - _int_valuation(q.denominator, p)


def is_fermat_prime(p: int) -> bool:
    """True iff ``p`` is prime and equals ``2**(2**k) + 1`` for some k >= 0."""
    if p < 2:
        raise ValueError("Fermat primality is defined for p >= 2")
    m = p - 1
    if m & (m - 1):
        return False
    # m = 2**e; need e itself a power of two (e = 0 gives p = 2, excluded).
    e = m.bit_length() - 1
    if e == 0 or e & (e - 1):
        return False
    return is_prime(p)


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division, primes in increasing order.

    >>> factorize(12)
    [(2, 2), (3, 1)]
    """
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    out: list[tuple[int, int]] = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    f = 5
    step = 2
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            out.append((f, e))
        f += step
        step = 6 - step
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of ``|n|``, ascending. ``n`` must be nonzero."""
    n = abs(n)
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def lcm_of_denominators(values) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, Fraction(v).denominator)
    return out

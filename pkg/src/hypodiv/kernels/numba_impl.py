"""JIT-compiled quadrature and bisection over the hypocycloid speed."""
import math

import numpy as np
from numba import njit

from ._rule import GAUSS_WEIGHTS, KRONROD_NODES, KRONROD_WEIGHTS


@njit(cache=True)
def _speed(k, phi):
    dx = -k * (math.sin(phi) + math.sin(k * phi))
    dy = k * (math.cos(phi) - math.cos(k * phi))
    return math.sqrt(dx * dx + dy * dy)


@njit(cache=True)
def _gk15(k, lo, hi):
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    kron = 0.0
    gauss = 0.0
    for i in range(15):
        f = _speed(k, mid + half * KRONROD_NODES[i])
        kron += KRONROD_WEIGHTS[i] * f
        gauss += GAUSS_WEIGHTS[i] * f
    return kron * half, abs(kron - gauss) * half


@njit(cache=True)
def adaptive_speed_integral(k, breaks, tol, max_intervals):
    """Globally adaptive GK15 of the speed over consecutive ``breaks``.

    Returns (value, error estimate, number of intervals).
    """
    lo = np.empty(max_intervals)
    hi = np.empty(max_intervals)
    val = np.empty(max_intervals)
    err = np.empty(max_intervals)
    m = 0
    for i in range(breaks.shape[0] - 1):
        if breaks[i + 1] > breaks[i] and m < max_intervals:
            lo[m] = breaks[i]
            hi[m] = breaks[i + 1]
            val[m], err[m] = _gk15(k, lo[m], hi[m])
            m += 1
    if m == 0:
        return 0.0, 0.0, 1
    while m < max_intervals:
        total_err = 0.0
        worst = 0
        for i in range(m):
            total_err += err[i]
            if err[i] > err[worst]:
                worst = i
        if total_err <= tol:
            break
        a = lo[worst]
        b = hi[worst]
        c = 0.5 * (a + b)
        if not (a < c < b):
            break
        hi[worst] = c
        val[worst], err[worst] = _gk15(k, a, c)
        lo[m] = c
        hi[m] = b
        val[m], err[m] = _gk15(k, c, b)
        m += 1
    value = 0.0
    total_err = 0.0
    for i in range(m):
        value += val[i]
        total_err += err[i]
    return value, total_err, m


@njit(cache=True)
def invert_speed_integral(k, breaks, s, tol, qtol, max_intervals):
    """Bisection for the angle at which the integrated speed reaches ``s``."""
    pair = np.empty(2)
    base = 0.0
    lo = breaks[0]
    hi = breaks[breaks.shape[0] - 1]
    for i in range(breaks.shape[0] - 1):
        pair[0] = breaks[i]
        pair[1] = breaks[i + 1]
        seg, _, _ = adaptive_speed_integral(k, pair, qtol, max_intervals)
        if base + seg >= s or i == breaks.shape[0] - 2:
            lo = breaks[i]
            hi = breaks[i + 1]
            break
        base += seg
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):
            break
        pair[0] = lo
        pair[1] = mid
        part, _, _ = adaptive_speed_integral(k, pair, qtol, max_intervals)
        if base + part < s:
            lo = mid
            base += part
        else:
            hi = mid
    return 0.5 * (lo + hi)

"""Pure-numpy twin of :mod:`numba_impl`: same algorithm, same refinement order."""
import heapq

import numpy as np

from ._rule import GAUSS_WEIGHTS, KRONROD_NODES, KRONROD_WEIGHTS


def _speed(k, phi):
    dx = -k * (np.sin(phi) + np.sin(k * phi))
    dy = k * (np.cos(phi) - np.cos(k * phi))
    return np.sqrt(dx * dx + dy * dy)


def _gk15(k, lo, hi):
    half = 0.5 * (hi - lo)
    f = _speed(k, 0.5 * (hi + lo) + half * KRONROD_NODES)
    kron = float(KRONROD_WEIGHTS @ f)
    gauss = float(GAUSS_WEIGHTS @ f)
    return kron * half, abs(kron - gauss) * half


def adaptive_speed_integral(k, breaks, tol, max_intervals):
    heap = []  # (-err, order, lo, hi, val)
    order = 0
    for a, b in zip(breaks[:-1], breaks[1:]):
        if b > a and len(heap) < max_intervals:
            v, e = _gk15(k, float(a), float(b))
            heap.append((-e, order, float(a), float(b), v))
            order += 1
    if not heap:
        return 0.0, 0.0, 1
    heapq.heapify(heap)
    total_err = sum(-h[0] for h in heap)
    while len(heap) < max_intervals and total_err > tol:
        neg_e, _, a, b, _ = heap[0]
        c = 0.5 * (a + b)
        if not (a < c < b):
            break
        heapq.heappop(heap)
        v1, e1 = _gk15(k, a, c)
        v2, e2 = _gk15(k, c, b)
        heapq.heappush(heap, (-e1, order, a, c, v1))
        heapq.heappush(heap, (-e2, order + 1, c, b, v2))
        order += 2
        total_err = sum(-h[0] for h in heap)
    return sum(h[4] for h in heap), total_err, len(heap)


def invert_speed_integral(k, breaks, s, tol, qtol, max_intervals):
    base = 0.0
    lo, hi = float(breaks[0]), float(breaks[-1])
    last = len(breaks) - 2
    for i in range(len(breaks) - 1):
        seg, _, _ = adaptive_speed_integral(k, breaks[i:i + 2], qtol, max_intervals)
        if base + seg >= s or i == last:
            lo, hi = float(breaks[i]), float(breaks[i + 1])
            break
        base += seg
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):
            break
        part, _, _ = adaptive_speed_integral(k, np.array([lo, mid]), qtol, max_intervals)
        if base + part < s:
            lo, base = mid, base + part
        else:
            hi = mid
    return 0.5 * (lo + hi)

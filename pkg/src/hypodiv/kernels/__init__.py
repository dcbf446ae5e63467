"""Hot loops of the quadrature oracle.

numba-compiled by default; set ``HYPODIV_DISABLE_NUMBA=1`` (or run without
numba installed) to use the pure-numpy implementation instead.
"""
import os

from . import numpy_impl

_disabled = os.environ.get("HYPODIV_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

_impl = numpy_impl
BACKEND = "numpy"
if not _disabled:
    try:
        from . import numba_impl as _impl

        BACKEND = "numba"
    except ImportError:
        pass

adaptive_speed_integral = _impl.adaptive_speed_integral
invert_speed_integral = _impl.invert_speed_integral


def get_backend(name: str):
    """Kernel module by name (``"numba"`` or ``"numpy"``), for tests and benchmarks."""
    if name == "numpy":
        return numpy_impl
    if name == "numba":
        from . import numba_impl

        return numba_impl
    raise ValueError(f"unknown kernel backend {name!r}")

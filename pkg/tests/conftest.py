import importlib.util

import pytest

from hypodiv.geometry import HypocycloidShape

STANDARD_RATIOS = ["3", "4", "5", "3/2", "5/2", "7/2", "7/3", "8/3"]
STANDARD_SHAPES = [HypocycloidShape.from_ratio(c) for c in STANDARD_RATIOS]

HAVE_NUMBA = importlib.util.find_spec("numba") is not None
BACKENDS = ["numpy", pytest.param("numba", marks=pytest.mark.skipif(not HAVE_NUMBA, reason="numba missing"))]

# Filled by test_acceptance; printed once at the end of the run.
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=STANDARD_SHAPES, ids=STANDARD_RATIOS)
def shape(request):
    return request.param


@pytest.fixture(params=BACKENDS)
def backend(request):
    from hypodiv.kernels import get_backend

    return get_backend(request.param)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

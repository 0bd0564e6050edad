import importlib

import pytest

from desitter import _kernels_py

ACCEPTANCE_RESULTS = []


def _backends():
    out = [pytest.param(_kernels_py, id="python")]
    try:
        out.append(pytest.param(importlib.import_module("desitter._kernels"), id="cython"))
    except ImportError:
        out.append(pytest.param(None, id="cython", marks=pytest.mark.skip("extension not built")))
    return out


@pytest.fixture(params=_backends())
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)

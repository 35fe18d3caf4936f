import sys

import numpy as np
import pytest

from hypercomplex import qmodule as qm


def random_antihermitian(rng, n):
    m = rng.standard_normal((n, n, 4))
    return 0.5 * (m - qm.adjoint(m))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[key])

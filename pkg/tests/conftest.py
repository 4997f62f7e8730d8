import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from eeespline import _kernels  # noqa: E402
from eeespline.fixtures import load_fixture  # noqa: E402

KERNELS = _kernels.available_kernels()


@pytest.fixture(params=sorted(KERNELS))
def kernel(request, monkeypatch):
    """Run the test once per available elimination kernel."""
    monkeypatch.setattr(_kernels, "int_gauss_jordan", KERNELS[request.param])
    return request.param


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def ms_sym():
    return load_fixture("ms_symmetric")


@pytest.fixture(scope="session")
def ms_gen():
    return load_fixture("ms_generic")


# vertex indices of the Morgan-Scott fixtures
A, B, C, D, E, F = range(6)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])

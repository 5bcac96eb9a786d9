import numpy as np
import pytest

from nekbound import _backend
from nekbound.io import BUILTIN_NAMES, builtin
from nekbound.prng import SplitMix64

BACKENDS = sorted(_backend.available_backends())


@pytest.fixture(params=BACKENDS)
def backend(request):
    """Run the test once per kernel backend, with the library switched over."""
    previous = _backend.set_backend(request.param)
    yield request.param
    _backend.set_backend(previous)


@pytest.fixture(params=BACKENDS)
def kern(request):
    return _backend.available_backends()[request.param]


@pytest.fixture(scope="session")
def builtins():
    return {name: builtin(name).matrix for name in BUILTIN_NAMES}


@pytest.fixture
def rng():
    return SplitMix64(20240501)


def reversed_order(a):
    a = np.asarray(a)
    return a[::-1, ::-1].copy()


ACCEPTANCE_LINES = []


def record_criterion(label, passed, detail=""):
    ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] {label}" + (f"  ({detail})" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

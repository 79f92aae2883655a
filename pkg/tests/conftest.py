import numpy as np
import pytest

from hardycheck.grid import GridFunction, GridSpec


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_function(spec: GridSpec, rng, nonneg: bool = False) -> GridFunction:
    v = rng.random(spec.shape) if nonneg else rng.standard_normal(spec.shape)
    return GridFunction(spec, v)


# one line per acceptance criterion, filled in by tests/test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)

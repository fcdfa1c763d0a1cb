import random

import pytest

from quadinv import make_ring, set_degree_cap


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture
def bo2():
    return make_ring("BO", 2)


@pytest.fixture(autouse=True)
def _restore_cap():
    yield
    set_degree_cap(48)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import REPORT
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)

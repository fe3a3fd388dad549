import os

import pytest
from hypothesis import HealthCheck, settings

from drinfeld_hecke.fq import fq_init
from drinfeld_hecke.series import RField

settings.register_profile("default", deadline=None, max_examples=30,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=100,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# (p, e, w) triples covering prime and extension fields
FIELDS = [(2, 1, 1), (2, 1, 2), (3, 1, 2), (2, 2, 3), (5, 1, 4)]


@pytest.fixture(params=FIELDS, ids=lambda t: f"q{t[0]**t[1]}w{t[2]}")
def field(request):
    p, e, w = request.param
    return RField(fq_init(p, e), w, 40)


@pytest.fixture
def F2():
    return RField(fq_init(2, 1), 2, 40)


@pytest.fixture
def F3():
    return RField(fq_init(3, 1), 2, 40)


_LINES = []


def record(line: str) -> None:
    _LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)

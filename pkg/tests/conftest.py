import pytest

from tsat.ring import DVR, Q, QT, RingSpec
from tsat.syntax import parse_poly


class Ring:
    """Test helper: a ring plus a terse parser."""

    def __init__(self, n, domain=Q, weights=()):
        self.spec = RingSpec(n, weights, domain)

    def __call__(self, text):
        return parse_poly(text, self.spec)

    def many(self, *texts):
        return [self(s) for s in texts]


@pytest.fixture
def R2():
    return Ring(2, DVR)


@pytest.fixture
def make_ring():
    return Ring


__all__ = ["Ring", "Q", "QT", "DVR"]


ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])

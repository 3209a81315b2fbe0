from fractions import Fraction

import pytest
from hypothesis import strategies as st

from lieforge.scalars import EpsPoly

small_rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def eps_polys(draw, trunc=None, max_degree=3):
    coeffs = draw(st.lists(small_rationals, max_size=max_degree + 1))
    return EpsPoly(coeffs, trunc)


_PENDING = {}  # nodeid -> (number, text)
_RESULTS = {}  # number -> (text, "PASS" | "FAIL")


@pytest.fixture
def criterion(request):
    """Record an acceptance criterion outcome for the terminal summary."""
    def record(number, text):
        _PENDING[request.node.nodeid] = (number, text)
    return record


def pytest_runtest_logreport(report):
    if report.when != "call" or report.nodeid not in _PENDING:
        return
    number, text = _PENDING.pop(report.nodeid)
    _RESULTS[number] = (text, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        text, status = _RESULTS[number]
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {text}")

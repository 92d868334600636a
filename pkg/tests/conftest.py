
import pytest
from hypothesis import settings

from pfqm.cli.expr import parse

settings.register_profile("default", max_examples=25, deadline=None)
settings.load_profile("default")


@pytest.fixture
def legendre_pf():
    return parse("(2*t-1)/(t^2-t)"), parse("1/(4*t^2-4*t)")




def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])

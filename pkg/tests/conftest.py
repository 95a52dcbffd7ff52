import pytest

from biquandle import catalog


@pytest.fixture(scope="session")
def order3():
    """A1..C6 by name."""
    return catalog.order3_biquandles()


@pytest.fixture(scope="session")
def small_biquandles():
    """Every biquandle of order 1 to 3, one per isomorphism class."""
    return [b for n in (1, 2, 3) for b in catalog.biquandle_census(n)]


@pytest.fixture(scope="session")
def small_quandles():
    return [q for n in (1, 2, 3) for q in catalog.quandle_census(n)]


@pytest.fixture(scope="session")
def Y():
    return catalog.quandle("Y")


def pytest_terminal_summary(terminalreporter):
    """Print one PASS/FAIL line per acceptance criterion that ran."""
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[number])

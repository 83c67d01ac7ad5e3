import pytest
from hypothesis import strategies as st

from extsq.algebra import BiSeries, SymPoly


def small_polys(n, max_terms=4, max_exp=3, max_coeff=5):
    mono = st.tuples(*[st.integers(0, max_exp)] * n)
    return st.dictionaries(mono, st.integers(-max_coeff, max_coeff), max_size=max_terms).map(lambda d: SymPoly(n, d))


def small_series(n, cap_x, cap_y, unit=False):
    key = st.tuples(st.integers(0, cap_x), st.integers(0, cap_y))
    coeffs = st.dictionaries(key, small_polys(n, max_terms=2, max_exp=2), max_size=3)

    def build(d):
        if unit:
            d[(0, 0)] = SymPoly.constant(1, n)
        return BiSeries(n, cap_x, cap_y, d)

    return coeffs.map(build)


@pytest.fixture
def alpha():
    """Variables alpha_1..alpha_n as SymPolys."""
    return lambda n: [SymPoly.variable(i, n) for i in range(n)]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

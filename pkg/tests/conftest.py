from fractions import Fraction

import pytest
from hypothesis import strategies as st

from polyconvex import Point, Polygon

SQUARE = Polygon([(0, 0), (1, 0), (1, 1), (0, 1)])
CROSSED = Polygon([(0, 0), (1, 1), (1, 0), (0, 1)])


def small_ints(bound=4):
    return st.integers(min_value=-bound, max_value=bound)


@st.composite
def rationals(draw, bound=6, max_den=4):
    return Fraction(draw(st.integers(-bound, bound)), draw(st.integers(1, max_den)))


@st.composite
def points(draw, coord=None):
    coord = small_ints() if coord is None else coord
    return Point(draw(coord), draw(coord))


@st.composite
def nonzero_vectors(draw, bound=50):
    x = draw(st.integers(-bound, bound))
    y = draw(st.integers(-bound, bound))
    if x == 0 and y == 0:
        x = draw(st.sampled_from([-1, 1]))
    return Point(x, y)


@st.composite
def polygons(draw, min_n=0, max_n=8, bound=3):
    n = draw(st.integers(min_n, max_n))
    return Polygon([draw(points(small_ints(bound))) for _ in range(n)])


@pytest.fixture
def square():
    return SQUARE


@pytest.fixture
def crossed():
    return CROSSED


_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        detail = dict(item.user_properties).get("detail", "")
        _CRITERIA[number] = (title, "PASS" if rep.passed else "FAIL", detail)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status, detail = _CRITERIA[number]
        line = f"criterion {number:>2}: {status}  {title}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))

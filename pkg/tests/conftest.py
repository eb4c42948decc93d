import sys

import pytest

from silpath.cartan import build_cartan
from silpath.weyl import AffineWeylElem


@pytest.fixture
def a1():
    return build_cartan("A", 1)


@pytest.fixture
def a2():
    return build_cartan("A", 2)


def elem(cartan, word=(), xi=None):
    """Helper: ``r_{word} t_xi`` with ``word`` over ``I_af``."""
    x = AffineWeylElem.from_word(cartan, list(word))
    if xi is not None:
        x = x * AffineWeylElem.translation(cartan, xi)
    return x


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results):
        terminalreporter.write_line(results[key][0])

import pytest

from artinsplit.corpus import load_corpus
from artinsplit.graph import PresentationGraph
from helpers import ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for ident, passed, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {ident}  {detail}")


@pytest.fixture
def ex34():
    return load_corpus("example3_4")


@pytest.fixture
def fig3():
    return load_corpus("figure3_union")


@pytest.fixture
def fig2():
    return load_corpus("figure2_as_printed")


@pytest.fixture
def fig3_x():
    return load_corpus("figure3_x")


@pytest.fixture
def fig3_y():
    return load_corpus("figure3_y")


@pytest.fixture
def k2_3():
    return PresentationGraph("ab", [("a", "b", 3)])

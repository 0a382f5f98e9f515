import pytest

from freecoh.presentation import Presentation

ACCEPTANCE_RESULTS: dict[str, str] = {}


def sym(*pairs, alphabet="ab"):
    return Presentation(alphabet, pairs)


@pytest.fixture
def commute():
    return sym(("ab", "ba"))


@pytest.fixture
def swap():
    return sym(("a", "b"))


@pytest.fixture
def commute_bab():
    return sym(("ab", "ba"), ("bab", "bb"))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for name in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k.split()[0])):
            terminalreporter.write_line(f"criterion {name}: {ACCEPTANCE_RESULTS[name]}")

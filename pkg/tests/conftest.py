import pytest

from kashaev import corpus


@pytest.fixture(scope="session")
def corpus_diagrams():
    return {e.name: e.diagram() for e in corpus.CORPUS}


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n])

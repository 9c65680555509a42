import hypothesis
import pytest

from oracles import T1_TEXT, t1

hypothesis.settings.register_profile("ci", max_examples=60, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile("ci")



@pytest.fixture
def T1():
    return t1()


@pytest.fixture
def t1_path(tmp_path):
    path = tmp_path / "t1.ecc"
    path.write_text(T1_TEXT)
    return path


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

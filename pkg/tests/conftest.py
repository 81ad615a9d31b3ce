import pytest
from hypothesis import settings

from sbe_mcdc.corpus import get_case

from .helpers import ACCEPTANCE_LINES

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")



def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def sbe1_text():
    return get_case(1).text

import pytest

from dschubert.perm import Permutation

# criterion number -> (description, passed)
ACCEPTANCE: dict = {}


@pytest.fixture
def P():
    return Permutation


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        desc, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {desc}")

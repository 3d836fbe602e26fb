import pytest

from cyclotomy import _purepy, numtheory, polyring

ACCEPTANCE_LINES = []


@pytest.fixture
def pure_backend(monkeypatch):
    """Route polynomial and primality kernels through the pure-Python fallback."""
    monkeypatch.setattr(polyring, "kernels", _purepy)
    monkeypatch.setattr(numtheory, "kernels", _purepy)
    return _purepy


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

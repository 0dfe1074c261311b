import os
from pathlib import Path

import pytest

from structobs import io

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

_criteria = {}


def load_fixture(name):
    return io.parse_system((FIXTURES / f"{name}.json").read_text())


@pytest.fixture(scope="session")
def example1():
    return load_fixture("example1")


@pytest.fixture(scope="session")
def example2():
    return load_fixture("example2")


@pytest.fixture(scope="session")
def example3():
    return load_fixture("example3")


@pytest.fixture(scope="session")
def ieee5bus():
    return load_fixture("ieee5bus")


@pytest.fixture
def criterion():
    """Record a named acceptance outcome; the terminal summary lists them all."""

    def record(number, title, ok, detail=""):
        _criteria[number] = (title, bool(ok), detail)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok, detail = _criteria[number]
        line = f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)


def pytest_report_header():
    from structobs import kernels

    forced = os.environ.get("STRUCTOBS_PURE_PYTHON")
    return f"structobs kernel backend: {kernels.BACKEND}" + (" (forced)" if forced else "")

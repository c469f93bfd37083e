from contextlib import contextmanager

import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record a PASS/FAIL line for an acceptance criterion while keeping the assertion."""

    @contextmanager
    def record(label: str):
        try:
            yield
        except BaseException as exc:
            ACCEPTANCE_LINES.append(f"FAIL  {label}  ({type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''})")
            raise
        ACCEPTANCE_LINES.append(f"PASS  {label}")

    return record


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False, help="run opt-in long tests (survey m = 9, 10)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import pytest

_LINES: list[str] = []


@pytest.fixture
def report_criterion():
    """Record one pass/fail line; the lines are printed at the end of the run."""

    def record(number: int, passed: bool, detail: str, seconds: float) -> None:
        line = f"criterion {number:2d}: {'PASS' if passed else 'FAIL'} ({seconds:.1f} s) {detail}"
        _LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LINES):
            terminalreporter.write_line(line)

import pytest

ACCEPTANCE: dict[int, tuple[str, str, float]] = {}


@pytest.fixture
def criterion():
    """Record ``(number, title, status, seconds)`` for the summary block."""

    def record(number, title, status, seconds):
        ACCEPTANCE[number] = (title, status, seconds)
        print(f"criterion {number} {status} ({seconds:.2f}s) {title}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, status, seconds = ACCEPTANCE[number]
        terminalreporter.write_line(f"{status} criterion {number}: {title} [{seconds:.2f}s]")

import pytest

_acceptance: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture
def acceptance():
    """Record (criterion number, title, passed, detail) for the end-of-run summary."""
    def record(number, title, passed, detail=""):
        _acceptance[number] = (title, passed, detail)
        print(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {title}  {detail}".rstrip())
    return record


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, passed, detail = _acceptance[number]
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {title}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)

import pytest

# (criterion, passed, detail) lines collected by test_acceptance.py
ACCEPTANCE_LINES: list[tuple[int, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for num, ok, detail in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d}: {detail}")


@pytest.fixture
def record_acceptance():
    def _record(num: int, ok: bool, detail: str) -> None:
        ACCEPTANCE_LINES.append((num, bool(ok), detail))
        print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}")
        assert ok, detail

    return _record

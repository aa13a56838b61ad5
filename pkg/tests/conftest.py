import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

# criterion number -> (title, passed, detail)
ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}
CRITERIA = 10


@pytest.fixture
def record():
    def _record(number, title, passed, detail=""):
        ACCEPTANCE[number] = (title, bool(passed), detail)

    return _record


def acceptance_lines():
    lines = []
    for number in range(1, CRITERIA + 1):
        if number in ACCEPTANCE:
            title, passed, detail = ACCEPTANCE[number]
            status = "PASS" if passed else "FAIL"
            lines.append(f"[{status}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
        else:
            lines.append(f"[----] criterion {number}: not run or did not complete")
    return lines


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance")
    for line in acceptance_lines():
        terminalreporter.write_line(line)

"""Shared test plumbing: acceptance-gate summary lines.

The acceptance tests register one entry per criterion; printing happens in
the terminal summary so the PASS/FAIL lines survive pytest's output capture
and always appear in a plain ``pytest -v`` log.
"""

ACCEPTANCE_LOG: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LOG:
        terminalreporter.write_line(line)

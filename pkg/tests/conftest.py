"""Shared test plumbing.

The acceptance tests register one PASS/FAIL line each; the terminal-summary
hook prints them after the run so they are visible even when every test
passes (pytest swallows captured stdout of passing tests).
"""

acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if not acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance_lines:
        terminalreporter.write_line(line)

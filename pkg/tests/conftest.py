"""Shared test plumbing.

test_acceptance appends one line per criterion here; the terminal-summary
hook replays them after the run so the verdict survives output capture.
"""

acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)

"""Terminal hook: replay the acceptance verdict lines after the summary.

Stdout of passing tests is captured, so without this the per-criterion
lines would only surface on failure.
"""

import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "REPORT", []) if mod is not None else []
    if lines:
        terminalreporter.section("acceptance report", sep="-")
        for line in lines:
            terminalreporter.write_line(line)

from __future__ import annotations

import re

_CRITERION = re.compile(r"::test_criterion_(\d+)")
_results: dict[int, list[tuple[str, bool]]] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _results.setdefault(int(m.group(1)), []).append((report.nodeid.split("::")[-1], report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        failed = [name for name, ok in _results[n] if not ok]
        line = f"criterion {n}: {'FAIL' if failed else 'PASS'}"
        if failed:
            line += f" ({', '.join(failed)})"
        terminalreporter.write_line(line)

"""Prints one PASS/FAIL line per acceptance criterion after the run."""

_RESULTS = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    if name.startswith("test_criterion_"):
        num = int(name.split("_")[2])
        _RESULTS[num] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(_RESULTS):
        word = "PASS" if _RESULTS[num] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {word}")

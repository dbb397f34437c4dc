import re


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one PASS/FAIL line per acceptance criterion after the run."""
    results: dict[int, bool] = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            match = re.search(r"test_criterion_(\d+)", nodeid)
            if match:
                number = int(match.group(1))
                results[number] = results.get(number, True) and outcome == "passed"
    if results:
        terminalreporter.write_line("")
        terminalreporter.write_line("acceptance criteria:")
        for number in sorted(results):
            status = "PASS" if results[number] else "FAIL"
            terminalreporter.write_line(f"  criterion {number}: {status}")

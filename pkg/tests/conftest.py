def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion at the end of the run."""
    entries = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance" in nodeid and "criterion" in nodeid:
                verdict = "PASS" if outcome == "passed" else "FAIL"
                entries.append((nodeid.split("::")[-1], verdict))
    if entries:
        terminalreporter.write_sep("=", "acceptance criteria")
        for name, verdict in sorted(entries):
            terminalreporter.write_line(f"{verdict}  {name}")

def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import report_lines
    except ImportError:
        return
    lines = report_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

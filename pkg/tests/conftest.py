_criteria: dict[str, tuple[int, str]] = {}
_outcomes: dict[int, bool] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion covered by the test")


def pytest_collection_modifyitems(config, items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _criteria[item.nodeid] = (m.args[0], m.args[1])


def pytest_runtest_logreport(report):
    if report.nodeid not in _criteria:
        return
    n = _criteria[report.nodeid][0]
    if report.when == "call" or report.failed:
        _outcomes[n] = _outcomes.get(n, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    titles = {n: t for n, t in _criteria.values()}
    terminalreporter.section("acceptance criteria")
    for n in sorted(_outcomes):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if _outcomes[n] else 'FAIL'} - {titles[n]}")

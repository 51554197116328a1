_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title, part=None): exit criterion of the build")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    number, title = marker.args[:2]
    ok = call.excinfo is None
    _, passed, failed = _criteria.get(number, (title, True, []))
    if not ok:
        failed.append(marker.args[2] if len(marker.args) > 2 else item.name)
    _criteria[number] = (title, passed and ok, failed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok, failed = _criteria[number]
        detail = "" if ok else f"  (failing: {', '.join(failed)})"
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}{detail}")

import pytest

_scoreboard = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    tag = getattr(getattr(item, "function", None), "_acceptance", None)
    if tag is None:
        return
    # record the call phase, or a setup phase that never reached the call
    if report.when == "call" or (report.when == "setup"
                                 and report.outcome != "passed"):
        _scoreboard.append((tag[0], tag[1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _scoreboard:
        return
    terminalreporter.write_sep("-", "acceptance scoreboard")
    for num, desc, outcome in sorted(_scoreboard):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(
            "acceptance %2d  %-36s %s" % (num, desc, status))

import pytest

ACCEPTANCE = {}


def record_criterion(number, passed):
    prev = ACCEPTANCE.get(number, True)
    ACCEPTANCE[number] = prev and passed


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call":
        record_criterion(marker.args[0], rep.passed)
    elif rep.failed:
        record_criterion(marker.args[0], False)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        status = "PASS" if ACCEPTANCE[number] else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}")

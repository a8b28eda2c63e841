import pytest

from pairsieve.oracle import is_prime_trial

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive sweeps taking several seconds")
    config.addinivalue_line("markers", "criterion(label, text): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    label = getattr(report, "criterion", None)
    if label:
        _criteria[label] = report.outcome


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark:
        rep.criterion = f"{mark.args[0]:<3} {mark.args[1]}"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in sorted(_criteria.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {label}")


@pytest.fixture(scope="session")
def odd_composite():
    """Trial-division compositeness for odd v, cached across tests."""
    cache = {}

    def check(v):
        if v not in cache:
            cache[v] = v > 1 and not is_prime_trial(v)
        return cache[v]

    return check

import pytest

_ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion; the outcome is filled in after the test runs."""
    def record(label, detail=""):
        _ACCEPTANCE[request.node.nodeid] = [label, detail, None]
    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.nodeid in _ACCEPTANCE:
        _ACCEPTANCE[item.nodeid][2] = rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, detail, passed in _ACCEPTANCE.values():
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {label}: {detail}")

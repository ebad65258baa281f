import pytest

_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line per test: ``criterion(label)`` then assert."""
    record = {}

    def set_label(label):
        record["label"] = label

    yield set_label
    rep = getattr(request.node, "rep_call", None)
    passed = rep is not None and rep.passed
    _ACCEPTANCE.append((record.get("label", request.node.name), passed))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}")

import pytest

_criteria = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``criterion(k, detail)`` before the asserts run."""
    entry = {"name": request.node.name, "label": None, "detail": ""}

    def note(label, detail=""):
        entry["label"], entry["detail"] = label, detail

    yield note
    rep = getattr(request.node, "rep_call", None)
    entry["passed"] = bool(rep and rep.passed)
    _criteria.append(entry)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for e in sorted(_criteria, key=lambda e: e["name"]):
        status = "PASS" if e["passed"] else "FAIL"
        terminalreporter.write_line(f"{status}  {e['label'] or e['name']}  {e['detail']}")

import pytest

_CRITERIA: list[tuple[str, bool, str]] = []


class CriterionRecorder:
    def __init__(self, name: str):
        self.name = name
        self.detail = ""

    def note(self, detail: str) -> None:
        self.detail = detail


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for the acceptance summary."""
    rec = CriterionRecorder(request.node.name)
    yield rec
    failed = getattr(request.node, "rep_call", None)
    passed = failed is not None and failed.passed
    _CRITERIA.append((rec.name, passed, rec.detail))


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _CRITERIA:
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {name}" + (f"  ({detail})" if detail else ""))

import pytest

ACCEPTANCE: dict = {}


@pytest.fixture
def record():
    def _record(criterion, ok, detail=""):
        ACCEPTANCE[criterion] = (ok, detail)
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line("criterion %d: %s  %s" % (k, "PASS" if ok else "FAIL", detail))

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pt12.triangulations import generate  # noqa: E402

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.fixture(scope="session")
def level12():
    return generate(12)


@pytest.fixture(scope="session")
def graphs12(level12):
    return [e.graph for e in level12.embeddings]


@pytest.fixture
def observed(request):
    """Dict a criterion test fills with measured values for the summary line."""
    marker = request.node.get_closest_marker("criterion")
    entry = _criteria.setdefault(marker.args[0], {"title": marker.args[1], "ok": True, "seen": {}})
    return entry["seen"]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when == "teardown":
        return
    entry = _criteria.setdefault(marker.args[0], {"title": marker.args[1], "ok": True, "seen": {}})
    if rep.failed:
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        seen = ", ".join(f"{k}={v}" for k, v in entry["seen"].items())
        status = "PASS" if entry["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {entry['title']}" + (f"  [{seen}]" if seen else ""))

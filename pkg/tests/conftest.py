import sys
from collections import OrderedDict
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parent / "fixtures"

_results: "OrderedDict[str, list[tuple[str, str]]]" = OrderedDict()
_titles: dict[str, str] = {}


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    cid, title, case = marker
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _titles[cid] = title
        _results.setdefault(cid, []).append((case, report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        cid, title = m.args[0], m.args[1]
        case = item.callspec.id if hasattr(item, "callspec") else item.name
        rep.criterion = (cid, title, case)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for cid in sorted(_results, key=lambda c: int(c[2:])):
        cases = _results[cid]
        failed = [case for case, outcome in cases if outcome != "passed"]
        status = "PASS" if not failed else "FAIL"
        line = f"{status} {cid} {_titles[cid]} ({len(cases) - len(failed)}/{len(cases)} cases)"
        if failed:
            line += "; failing: " + ", ".join(failed)
        tr.write_line(line)

"""Collect acceptance outcomes and print one line per criterion after the run."""

import pytest

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(cid, title): acceptance criterion id and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    cid, title = marker.args
    detail = getattr(item, "acceptance_detail", "")
    _ACCEPTANCE[cid] = (title, report.outcome, detail)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")

    def order(cid):
        num = "".join(ch for ch in cid if ch.isdigit())
        return int(num), cid

    for cid in sorted(_ACCEPTANCE, key=order):
        title, outcome, detail = _ACCEPTANCE[cid]
        status = "PASS" if outcome == "passed" else "FAIL"
        line = f"[{status}] {cid:<4} {title}"
        if detail:
            line += f" :: {detail}"
        tr.write_line(line)
    passed = sum(1 for _, o, _ in _ACCEPTANCE.values() if o == "passed")
    tr.write_line(f"{passed}/{len(_ACCEPTANCE)} acceptance checks passed")

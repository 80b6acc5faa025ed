from __future__ import annotations

import re

_ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if not m:
        return
    idx = int(m.group(1))
    reason = ""
    if report.failed:
        lines = [ln[1:].strip() for ln in report.longreprtext.splitlines() if ln.startswith("E ")]
        reason = lines[0] if lines else "failed"
    _ACCEPTANCE[idx] = (report.nodeid.split("::")[-1], report.passed, reason)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for idx in sorted(_ACCEPTANCE):
        name, ok, reason = _ACCEPTANCE[idx]
        line = f"{'PASS' if ok else 'FAIL'} criterion {idx:2d}  {name}"
        if reason:
            line += f"  -- {reason}"
        tr.write_line(line)
    passed = sum(ok for _, ok, _ in _ACCEPTANCE.values())
    tr.write_line(f"{passed}/{len(_ACCEPTANCE)} acceptance criteria pass")

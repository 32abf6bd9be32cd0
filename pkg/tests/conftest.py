"""Prints one verdict line per acceptance criterion after the run."""

import re

_LABELS = {
    1: "figure goldens",
    2: "nesting map is a bijection on every sector",
    3: "agreement map is a bijection on every sector",
    4: "five-way pair count agreement",
    5: "flip-record identities on every sector element",
    6: "walk conjugation and the step dictionary",
    7: "octant walk census vs closed forms",
    8: "floor bijection and its counts",
    9: "origin walks vs diagonal octant walks",
    10: "plane-partition roundtrip and box counts",
    11: "triple counts agree",
}

_outcomes: dict[int, bool] = {}
_durations: dict[int, float] = {}


def pytest_runtest_logreport(report):
    match = re.search(r"test_acceptance\.py::test_c(\d\d)", report.nodeid)
    if not match:
        return
    num = int(match.group(1))
    if report.when == "call":
        _durations[num] = report.duration
    if report.failed:
        _outcomes[num] = False
    elif report.passed and report.when == "call":
        _outcomes.setdefault(num, True)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_outcomes):
        verdict = "PASS" if _outcomes[num] else "FAIL"
        took = f" ({_durations[num]:.1f}s)" if num in _durations else ""
        terminalreporter.write_line(
            f"criterion {num}: {verdict}{took}  {_LABELS.get(num, '')}"
        )

"""Per-criterion pass/fail summary for the acceptance suite.

Tests marked @pytest.mark.criterion(N) are tallied and reported as one
line per criterion at the end of the run.
"""

from collections import defaultdict

import pytest

CRITERIA = {
    1: "algebraic contracts (nilpotency, symmetry, rank)",
    2: "duality verdicts under the correct inner product",
    3: "exact distances by exhaustive enumeration",
    4: "witness upper bounds + randomized search",
    5: "rank lemma instances",
    6: "quantum CSS parameters",
    7: "property suites",
    8: "conjecture tracker",
    9: "4-cycle row separation",
}

_tally = defaultdict(lambda: [0, 0])  # criterion -> [passed, failed]


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(n): acceptance criterion this test belongs to"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when != "call":
        return
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n = marker.args[0]
    if rep.passed:
        _tally[n][0] += 1
    elif rep.failed:
        _tally[n][1] += 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _tally:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for n in sorted(CRITERIA):
        if n not in _tally:
            continue
        passed, failed = _tally[n]
        status = "PASS" if failed == 0 else "FAIL"
        terminalreporter.write_line(
            f"criterion {n}: {status} ({passed} passed, {failed} failed)"
            f" - {CRITERIA[n]}"
        )

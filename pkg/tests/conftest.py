"""Shared fixtures and the acceptance-line reporter.

Every test that realizes one of the eight acceptance criteria carries
@pytest.mark.acceptance(n, "label"); the terminal summary prints one
PASS/FAIL line per criterion so the gate can be read off directly.
"""

import pytest

from baireguess import corpus_points, corpus_sentences, seeded_machines

_ACCEPTANCE_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "acceptance(n, label): realizes acceptance criterion n; reported as one line",
    )
    config.addinivalue_line("markers", "slow: long-running end-to-end check")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    n, label = mark.args
    ok = report.passed and _ACCEPTANCE_RESULTS.get(n, (True, label))[0]
    _ACCEPTANCE_RESULTS[n] = (ok, label)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for n in sorted(_ACCEPTANCE_RESULTS):
        ok, label = _ACCEPTANCE_RESULTS[n]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {n} ({label}): {verdict}")


@pytest.fixture(scope="session")
def points100():
    pts = corpus_points(100, seed=2024)
    assert len(pts) == 100
    return pts


@pytest.fixture(scope="session")
def sentences200():
    phis = corpus_sentences(200, seed=2024)
    assert len(phis) == 200
    return phis


@pytest.fixture(scope="session")
def machines20():
    return seeded_machines(20, seed=2024)

import sys
from collections import OrderedDict
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

CRITERIA = {
    1: "fixed sandwich example (delta_f, rhs integers, middle (1,1)/(1,2), four chains)",
    2: "fixed Omega example (delta_f, lhs, middle/rhs prints, strict links)",
    3: "introductory counterexamples (incomparability, prints, AB + BA minor)",
    4: "fuzz suites: 1000 instances per checker, zero failures, under 2 min",
    5: "refinement terms in range across all fuzz instances",
    6: "oracle equivalence on 500 diagonal instances",
    7: "mutation sensitivity within 200 trials per theorem",
    8: "operator convex chain for t^2 on 200 Omega instances",
}

_results = OrderedDict((k, []) for k in CRITERIA)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion the test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        detail = dict(item.user_properties).get("detail", "")
        _results[mark.args[0]].append((item.name, rep.outcome, detail))


def pytest_terminal_summary(terminalreporter):
    if not any(_results.values()):
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, title in CRITERIA.items():
        runs = _results[n]
        if not runs:
            tr.write_line(f"criterion {n}: NOT RUN  {title}")
            continue
        bad = [r for r in runs if r[1] != "passed"]
        status = "PASS" if not bad else "FAIL"
        tr.write_line(f"criterion {n}: {status}  {title}  [{len(runs) - len(bad)}/{len(runs)} tests]")
        for name, outcome, detail in bad:
            tr.write_line(f"    {outcome}: {name}" + (f"  ({detail})" if detail else ""))

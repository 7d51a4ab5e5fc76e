import re
from collections import defaultdict

CRITERIA = {
    1: "Hopf-equation verdicts",
    2: "R12R13 matrix reproduction",
    3: "component vs operator check on all GF(2) candidates",
    4: "sigma from R on every GF(2) solution",
    5: "B(R) onto F(k)",
    6: "sigma tables of the catalog",
    7: "F(k) sigma discrepancy",
    8: "right integrals",
    9: "nonexistence and uniqueness searches",
    10: "Hopf elements",
    11: "inverse solutions",
    12: "generator-level (H1) implies word-level (H1)",
}

_results: dict[int, list[str]] = defaultdict(list)


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_ac(\d+)_", report.nodeid)
    if not m:
        return
    if report.when == "call" or report.outcome != "passed":
        _results[int(m.group(1))].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        outcomes = _results.get(n)
        if not outcomes:
            status = "NOT RUN"
        elif all(o == "passed" for o in outcomes):
            status = "PASS"
        else:
            status = "FAIL"
        terminalreporter.write_line(f"AC{n:<3} {status:<8} {title}")

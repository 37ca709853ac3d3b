import re

_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::(test_criterion_\w+)", report.nodeid)
    if m is None:
        return
    name = m.group(1)
    if report.when == "call" or report.outcome != "passed":
        if _criteria.get(name) != "FAIL":
            _criteria[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        terminalreporter.write_line(f"{_criteria[name]}  {name[len('test_criterion_'):]}")

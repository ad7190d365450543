"""Collects the outcome of acceptance criteria and prints one line per criterion."""

import pytest

_RESULTS: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    detail = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
    _RESULTS[number] = ("PASS" if report.passed else "FAIL", title, detail)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        status, title, detail = _RESULTS[number]
        line = f"AC{number:<2} {status}  {title}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))
    passed = sum(1 for s, _, _ in _RESULTS.values() if s == "PASS")
    terminalreporter.write_line(f"{passed}/{len(_RESULTS)} criteria passed")

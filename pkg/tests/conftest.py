import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

_ACCEPTANCE_KEY = pytest.StashKey[dict]()


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): numbered acceptance criterion")
    config.stash[_ACCEPTANCE_KEY] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    results = item.config.stash[_ACCEPTANCE_KEY]
    failed = report.failed or (report.when == "call" and not report.passed)
    if failed or number not in results:
        results[number] = (title, "FAIL" if failed else "PASS", getattr(item, "elapsed", None))
    elif report.when == "call":
        results[number] = (title, "PASS", getattr(item, "elapsed", None))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_ACCEPTANCE_KEY, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        title, status, elapsed = results[number]
        timing = f" ({elapsed:.2f}s)" if elapsed is not None else ""
        terminalreporter.write_line(f"{status} criterion {number:2d}: {title}{timing}")

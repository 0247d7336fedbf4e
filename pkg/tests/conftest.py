import time
from contextlib import contextmanager

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("repo", deadline=None, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

_ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def criterion():
    """Record one acceptance line per criterion, with the elapsed time
    checked against its limit."""

    @contextmanager
    def run(number: int, title: str, limit_s: float | None = None):
        t0 = time.perf_counter()
        note = {"detail": ""}
        try:
            yield note
        except BaseException as exc:
            _ACCEPTANCE[number] = (False, f"{title}: {type(exc).__name__}: {exc}".splitlines()[0])
            raise
        elapsed = time.perf_counter() - t0
        if limit_s is not None and elapsed >= limit_s:
            _ACCEPTANCE[number] = (False, f"{title}: took {elapsed:.2f}s, limit {limit_s}s")
            pytest.fail(f"criterion {number} took {elapsed:.2f}s (limit {limit_s}s)")
        limit = f" (< {limit_s}s)" if limit_s is not None else ""
        detail = f"; {note['detail']}" if note["detail"] else ""
        _ACCEPTANCE[number] = (True, f"{title}: {elapsed:.2f}s{limit}{detail}")

    return run


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        ok, text = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {text}")

import time
from contextlib import contextmanager

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "deterministic",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("deterministic")

SESSION_START = time.perf_counter()
CRITERIA: dict[int, tuple[bool, str]] = {}


def pytest_collection_modifyitems(config, items):
    # Acceptance runs last so the wall-clock criterion sees the whole suite.
    items.sort(key=lambda it: "test_acceptance" in it.nodeid)


@pytest.fixture
def criterion():
    @contextmanager
    def record(number: int, title: str):
        t0 = time.perf_counter()
        try:
            yield
        except BaseException as exc:
            CRITERIA[number] = (False, f"{title} ({type(exc).__name__}: {str(exc)[:120]})")
            raise
        CRITERIA[number] = (True, f"{title} [{time.perf_counter() - t0:.1f}s]")

    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        ok, msg = CRITERIA[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {msg}")
    terminalreporter.write_line(f"suite wall-clock: {time.perf_counter() - SESSION_START:.1f}s")

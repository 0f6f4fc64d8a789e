import contextlib
import time

import pytest

_RESULTS = {}


@pytest.fixture
def acceptance():
    """Time one acceptance criterion and record a PASS/FAIL line for the summary."""

    @contextlib.contextmanager
    def run(number, title, seconds):
        start = time.perf_counter()
        try:
            yield
        except BaseException as exc:
            took = time.perf_counter() - start
            _RESULTS[number] = f"FAIL  criterion {number:>2}: {title} ({took:.2f}s; {type(exc).__name__}: {exc})"
            raise
        took = time.perf_counter() - start
        if took > seconds:
            _RESULTS[number] = f"FAIL  criterion {number:>2}: {title} ({took:.2f}s > {seconds:g}s limit)"
            pytest.fail(f"criterion {number} took {took:.2f}s, limit {seconds:g}s")
        _RESULTS[number] = f"PASS  criterion {number:>2}: {title} ({took:.2f}s, limit {seconds:g}s)"
        print(_RESULTS[number])

    return run


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        terminalreporter.write_line(_RESULTS[number])

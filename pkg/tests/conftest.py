import time
from contextlib import contextmanager

import pytest

_RESULTS = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Times a block, enforces its budget and records one PASS/FAIL line."""
    results = request.config.stash.setdefault(_RESULTS, [])

    @contextmanager
    def run(number, title, budget_s):
        start = time.perf_counter()
        line = None
        try:
            yield
            elapsed = time.perf_counter() - start
            ok = elapsed < budget_s
            line = (number, f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title} "
                            f"({elapsed:.2f}s, budget {budget_s:g}s)")
            assert ok, f"criterion {number} exceeded its {budget_s}s budget ({elapsed:.2f}s)"
        except BaseException as exc:
            if line is None:
                elapsed = time.perf_counter() - start
                line = (number, f"FAIL  criterion {number:>2}: {title} ({elapsed:.2f}s) -- "
                                f"{type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}")
            raise
        finally:
            results.append(line)

    return run


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(_RESULTS, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(results):
        terminalreporter.write_line(line)

"""Collects one line per acceptance criterion for the terminal summary."""

import time
from contextlib import contextmanager

LINES = []


@contextmanager
def criterion(number, title, limit):
    start = time.perf_counter()
    status, detail = "FAIL", ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if elapsed >= limit:
            detail = f" (over the {limit:g} s limit)"
            raise AssertionError(f"criterion {number} took {elapsed:.2f} s, limit {limit:g} s")
        status = "PASS"
    except BaseException as exc:
        if not detail:
            detail = f" ({type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''})"
        raise
    finally:
        elapsed = time.perf_counter() - start
        line = f"{status} criterion {number:>2}: {title} [{elapsed:.2f} s / {limit:g} s]{detail}"
        LINES.append(line)
        print(line)

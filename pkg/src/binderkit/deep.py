"""Run deeply recursive work on a thread with a large stack.

Every traversal here is structurally recursive, so very deep terms need more
stack than the interpreter's main thread offers.
"""

from __future__ import annotations

import sys
import threading
from typing import Any, Callable

STACK_BYTES = 512 * 1024 * 1024
RECURSION_LIMIT = 50_000


def deep_call(fn: Callable[..., Any], *args: Any, **kwargs: Any) -> Any:
    """Call ``fn`` on a fresh large-stack thread and return (or re-raise) its outcome."""
    box: dict = {}

    def target():
        try:
            box["value"] = fn(*args, **kwargs)
        except BaseException as exc:  # handed back to the caller
            box["error"] = exc

    sys.setrecursionlimit(max(sys.getrecursionlimit(), RECURSION_LIMIT))
    old = threading.stack_size(STACK_BYTES)
    try:
        worker = threading.Thread(target=target)
        worker.start()
    finally:
        threading.stack_size(old)
    worker.join()
    if "error" in box:
        raise box["error"]
    return box["value"]

import time

_SESSION_START = None
_BUDGET_SECONDS = 180


def pytest_sessionstart(session):
    global _SESSION_START
    _SESSION_START = time.monotonic()


def session_elapsed() -> float:
    return time.monotonic() - _SESSION_START


def pytest_sessionfinish(session, exitstatus):
    elapsed = session_elapsed()
    line = f"full-suite wall clock: {elapsed:.1f}s (budget {_BUDGET_SECONDS}s)"
    if elapsed > _BUDGET_SECONDS and exitstatus == 0:
        session.exitstatus = 1
        print(f"\nFAIL {line}")
    else:
        print(f"\n{line}")

import time

RESULTS = {}
FULL_SUITE_BUDGET_S = 120.0


def record(key, title, passed, detail=""):
    RESULTS[key] = (title, passed, detail)


def pytest_sessionstart(session):
    session.config._netgames_t0 = time.perf_counter()


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - session.config._netgames_t0
    session.config._netgames_elapsed = elapsed
    if RESULTS and elapsed >= FULL_SUITE_BUDGET_S:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: int(k[2:])):
        title, passed, detail = RESULTS[key]
        tr.write_line(f"{'PASS' if passed else 'FAIL'}  {key:<5} {title}  {detail}")
    elapsed = getattr(config, "_netgames_elapsed", 0.0)
    ok = elapsed < FULL_SUITE_BUDGET_S
    tr.write_line(f"{'PASS' if ok else 'FAIL'}  AC11  full suite runtime {elapsed:.1f}s (< {FULL_SUITE_BUDGET_S:.0f}s)")

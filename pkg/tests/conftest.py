import random

import pytest


def random_symbols(rng, n, sigma):
    return [rng.randrange(sigma) for _ in range(n)]


def periodic_symbols(rng, n, period, sigma=3):
    base = [rng.randrange(sigma) for _ in range(period)]
    return [base[x % period] for x in range(n)]


def fibonacci_word(n):
    a, b = "a", "ab"
    while len(b) < n:
        a, b = b, b + a
    return b[:n]


@pytest.fixture
def rng():
    return random.Random(20241015)


_CRITERIA = []


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    props = dict(report.user_properties)
    if "criterion" in props:
        status = "PASS" if report.passed else "FAIL"
        _CRITERIA.append((props["criterion"], status, props.get("measured", "")))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, status, measured in sorted(_CRITERIA, key=lambda c: int(c[0].split()[0])):
        line = f"criterion {name}: {status}"
        if measured:
            line += f"  ({measured})"
        terminalreporter.write_line(line)

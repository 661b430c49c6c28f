import random

import pytest
from hypothesis import settings

from latnrd import exact

settings.register_profile("latnrd", deadline=None, max_examples=40, derandomize=True)
settings.load_profile("latnrd")

_acceptance = []


def random_unimodular(n, rng, lo=-2, hi=2):
    """Non-identity unimodular matrix with entries in [lo, hi] from column operations."""
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    while True:
        u = [r[:] for r in ident]
        for _ in range(rng.randint(1, 3 * n)):
            i, j = rng.sample(range(n), 2)
            c = rng.choice((-1, 1))
            v = [r[:] for r in u]
            for r in range(n):
                v[r][j] += c * v[r][i]
            if all(lo <= x <= hi for r in v for x in r):
                u = v
        if u != ident:
            assert abs(exact.det(u)) == 1
            return u


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and rep.when == "call":
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _acceptance.append(("PASS" if rep.passed else "FAIL", doc))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for status, doc in _acceptance:
        terminalreporter.write_line(f"{status} {doc}")

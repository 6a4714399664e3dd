import random
from math import isqrt

import pytest


def brute_pell(D: int) -> tuple[int, int]:
    """Smallest k >= 1 with 1 + D k^2 a perfect square."""
    k = 1
    while True:
        s = 1 + D * k * k
        r = isqrt(s)
        if r * r == s:
            return r, k
        k += 1


def random_unimodular(rng: random.Random, n: int, steps: int = 6) -> list[list[int]]:
    """Product of random elementary integer matrices, determinant +-1."""
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        kind = rng.random()
        if n > 1 and kind < 0.6:
            c = rng.choice([-2, -1, 1, 2])
            M[i] = [a + c * b for a, b in zip(M[i], M[j])]
        elif n > 1 and kind < 0.8:
            M[i], M[j] = M[j], M[i]
        else:
            M[i] = [-a for a in M[i]]
    return M


@pytest.fixture
def rng():
    return random.Random(20261016)


ACCEPTANCE_RESULTS: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[n])

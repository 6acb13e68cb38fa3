import random

import pytest

from stransform.plan import Regime, make_plan

# (s, N, regime, expected M); one valid plan per regime
PLAN_CASES = [
    (2, 5, Regime.mersenne(), 31),
    (2, 8, Regime.fermat(4), 17),
    (3, 3, Regime.prime(), 13),
    (3, 5, Regime.prime(), 121),
    (2, 9, Regime.prime_power(3, 2), 73),
    (4, 4, Regime.two_p(2), 17),
    (2, 16, Regime.two_p(8), 257),
    (2, 4, Regime.pseudo_fermat(), 5),
    (3, 6, Regime.pseudo_fermat(), 7),
]


def _id(case):
    s, N, regime, M = case
    return f"{regime.name}-s{s}-N{N}-M{M}"


@pytest.fixture(params=PLAN_CASES, ids=_id)
def plan(request):
    s, N, regime, M = request.param
    p = make_plan(s, N, regime)
    assert p.M == M
    return p


@pytest.fixture
def rng():
    return random.Random(20240611)


def oracle_forward(s, N, M, x):
    """Textbook evaluation with Python's own modular inverse for negative powers."""
    return [sum(x[i] * pow(s, -(k * i), M) for i in range(N)) % M for k in range(N)]


def oracle_inverse(s, N, M, X):
    n_inv = pow(N, -1, M)
    return [n_inv * sum(X[k] * pow(s, k * i, M) for k in range(N)) % M for i in range(N)]


def oracle_cyclic(x, y, M):
    N = len(x)
    return [sum(x[i] * y[(n - i) % N] for i in range(N)) % M for n in range(N)]


def schoolbook(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        for j, v in enumerate(b):
            out[i + j] += u * v
    return out


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

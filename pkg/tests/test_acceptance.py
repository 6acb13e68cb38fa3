"""Acceptance battery: one PASS/FAIL line per criterion.

Run under pytest (lines appear in the "acceptance criteria" summary section)
or directly with ``python tests/test_acceptance.py``. Tolerances are exact
(integer arithmetic); the only thresholds are the runtime limits below.
"""

import random
import sys
import time
from itertools import product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES, oracle_cyclic, oracle_forward, schoolbook  # noqa: E402
from stransform import duality, gaussian, pairs, rebase, theorems  # noqa: E402
from stransform.bigring import RingModulus, exponent_reduce  # noqa: E402
from stransform.errors import TheoremViolation  # noqa: E402
from stransform.plan import Regime, make_plan  # noqa: E402
from stransform.transform import forward, inverse, mat_mul, matrices  # noqa: E402

MATRIX_LIMIT_S = 1e-3
SWEEP_LIMIT_S = 1.0
REBASE_LIMIT_S = 1.0
SEED = 1729

CRITERION_3_PLANS = [
    ("Mersenne", 2, 5, Regime.mersenne(), 31),
    ("Fermat", 2, 8, Regime.fermat(4), 17),
    ("prime N", 3, 3, Regime.prime(), 13),
    ("prime N", 3, 5, Regime.prime(), 121),
    ("prime power", 2, 9, Regime.prime_power(3, 2), 73),
    ("two-p", 4, 4, Regime.two_p(2), 17),
    ("pseudo-Fermat", 2, 4, Regime.pseudo_fermat(), 5),
]


def acceptance_plans():
    return [make_plan(s, N, r) for _, s, N, r, _ in CRITERION_3_PLANS]


def rand_seq(rng, plan):
    return [rng.randrange(plan.M) for _ in range(plan.N)]


# --- criteria ---------------------------------------------------------------

def c1_matrix_example():
    plan = make_plan(3, 3, Regime.prime())
    want = ((3, 0, 0), (0, 3, 0), (0, 0, 3))
    best, product_ = float("inf"), None
    for _ in range(20):
        t0 = time.perf_counter()
        fwd, inv = matrices(plan)
        product_ = mat_mul(fwd.entries, inv.entries, plan.M)
        best = min(best, time.perf_counter() - t0)
    ok = product_ == want and plan.M == 13 and best < MATRIX_LIMIT_S
    return ok, f"product {product_}, best of 20 runs {best * 1e3:.3f} ms (limit 1 ms)"


def c2_fundamental_sweep():
    t0 = time.perf_counter()
    failures = total = 0
    for s in range(2, 10):
        for p in range(2, 10):
            for M in (s**p - 1, sum(s**m for m in range(p))):
                m = RingModulus(M)
                for x in range(4 * p + 1):
                    total += 1
                    try:
                        r = exponent_reduce(s, x, p, m)
                    except TheoremViolation:
                        failures += 1
                        continue
                    failures += r.residue != pow(s, x, M)
    elapsed = time.perf_counter() - t0
    return failures == 0 and elapsed < SWEEP_LIMIT_S, f"{failures}/{total} failures in {elapsed:.3f} s (limit 1 s)"


def c3_regime_coverage():
    rng = random.Random(SEED)
    parts, ok = [], True
    for label, s, N, regime, M in CRITERION_3_PLANS:
        plan = make_plan(s, N, regime)
        # independent validity re-check
        valid = (
            plan.M == M
            and pow(plan.s, N, M) == 1
            and all(pow(plan.s, d, M) != 1 for d in range(1, N) if N % d == 0)
            and all(sum(pow(plan.s, d * k % N, M) for k in range(N)) % M == (0 if d else N % M) for d in range(N))
        )
        bad = sum(inverse(plan, forward(plan, x)) != x for x in (rand_seq(rng, plan) for _ in range(100)))
        ok &= valid and bad == 0
        parts.append(f"{label}({s},{N},{M}) {100 - bad}/100")
    return ok, "; ".join(parts)


def c4_convolution_oracles():
    rng = random.Random(SEED)
    bad_cyclic = total = 0
    for plan in acceptance_plans():
        for _ in range(100):
            x, y = rand_seq(rng, plan), rand_seq(rng, plan)
            total += 1
            bad_cyclic += theorems.cyclic_convolve(plan, x, y) != oracle_cyclic(x, y, plan.M)
    bad_exact = 0
    for _ in range(100):
        a = [rng.randint(0, 1000) for _ in range(rng.randint(1, 9))]
        b = [rng.randint(0, 1000) for _ in range(rng.randint(1, 9))]
        bad_exact += theorems.convolve_exact_integers(a, b) != schoolbook(a, b)
    ok = bad_cyclic == 0 and bad_exact == 0
    return ok, f"cyclic {total - bad_cyclic}/{total}, exact {100 - bad_exact}/100"


def _theorem_battery():
    """Per-identity failure counts over every tested plan, 50 random sequences each."""
    rng = random.Random(SEED)
    counts = {}

    def tick(name, ok):
        c = counts.setdefault(name, [0, 0])
        c[0] += not ok
        c[1] += 1

    for plan in acceptance_plans():
        N, M = plan.N, plan.M
        n_inv = pow(N, -1, M)
        for _ in range(50):
            x, y = rand_seq(rng, plan), rand_seq(rng, plan)
            mu, c = rng.randrange(M), rng.randrange(1, N)
            X = oracle_forward(plan.s, N, M, x)
            Y = oracle_forward(plan.s, N, M, y)
            tick("linearity", forward(plan, [mu * v % M for v in x]) == [mu * v % M for v in X])
            tick("sum", forward(plan, [(a + b) % M for a, b in zip(x, y)]) == [(a + b) % M for a, b in zip(X, Y)])
            for sign, key in ((1, "shift, positive offset"), (-1, "shift, negative offset")):
                w = theorems.shift_image(plan, x, sign * c, check=False)
                tick(key, forward(plan, w) == [X[(k - sign * c) % N] for k in range(N)])
            w = theorems.shift_original(plan, X, c, check=False)
            tick("image weighting shifts the original", inverse(plan, w) == [x[(i + c) % N] for i in range(N)])
            xy = [a * b % M for a, b in zip(x, y)]
            tick("image convolution of a product",
                 forward(plan, xy) == [n_inv * v % M for v in oracle_cyclic(X, Y, M)])
            tick("original convolution", theorems.cyclic_convolve(plan, x, y) == oracle_cyclic(x, y, M))
            tick("Wiener-Khinchin",
                 theorems.autocorrelation(plan, y, check=False) == inverse(plan, [v * v % M for v in Y]))
            lhs, rhs = theorems.image_autocorrelation_printed_sides(plan, y)
            tick("converse Wiener-Khinchin", lhs == rhs)
            a, b = theorems.parseval_check(plan, y)
            tick("Parseval", a == b)
    return counts


_BATTERY = {}


def battery():
    if not _BATTERY:
        _BATTERY.update(_theorem_battery())
    return _BATTERY


def c5(name):
    def run():
        f, t = battery()[name]
        return f == 0, f"{t - f}/{t} hold across {len(CRITERION_3_PLANS)} plans x 50 sequences"
    run.__name__ = name
    return run


def c6_rebase_two_path():
    t0 = time.perf_counter()
    pair = rebase.make_pair(make_plan(2, 3, Regime.prime()), make_plan(3, 3, Regime.prime()))
    bad, first = 0, None
    for x in product(range(7), repeat=3):
        x = list(x)
        got = rebase.rebase_image(pair, forward(pair.plan2, x), check=False)
        if [v % 7 for v in got] != forward(pair.plan1, x):
            bad += 1
            first = first or x
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and elapsed < REBASE_LIMIT_S
    detail = f"{343 - bad}/343 originals agree in {elapsed:.3f} s"
    if first:
        detail += f"; first disagreement at x={first}"
    return ok, detail


def c7_gaussian_round_trip():
    plan = gaussian.make_gaussian_plan(gaussian.GaussianElement(2, 1), 3)
    rng = random.Random(SEED)
    bad = 0
    for _ in range(100):
        z = [gaussian.GaussianElement(rng.randrange(61), rng.randrange(61)) for _ in range(3)]
        back = gaussian.gauss_inverse(plan, gaussian.gauss_forward(plan, z))
        bad += not all(gaussian.gauss_divides(plan.modulus, a - b) for a, b in zip(back, z))
    ok = plan.modulus == gaussian.GaussianElement(6, 5) and plan.norm.value == 61 and bad == 0
    return ok, f"modulus {plan.modulus}, norm {plan.norm.value}, {100 - bad}/100 round trips"


SCALAR_DUALS = {
    "complement De Morgan product": (duality.de_morgan_product, lambda a, b, M: (a + b - a * b) % M),
    "dual product": (duality.dual_product, lambda a, b, M: a * b % M),
    "dual sum": (duality.dual_sum, lambda a, b, M: (a + b) % M),
}


def c8_scalar(name):
    fn, want = SCALAR_DUALS[name]

    def run():
        m = RingModulus(13)
        bad = 0
        for a in range(13):
            for b in range(13):
                try:
                    bad += fn(m.element(a), m.element(b)).residue != want(a, b, 13)
                except TheoremViolation:
                    bad += 1
        return bad == 0, f"{169 - bad}/169 pairs at M=13"
    run.__name__ = name
    return run


_DUAL = {}


def dual_counts():
    if not _DUAL:
        rng = random.Random(SEED)
        for plan in acceptance_plans():
            for _ in range(50):
                rep = duality.dual_theorem_suite(plan, rand_seq(rng, plan), rand_seq(rng, plan), rng.randrange(plan.M))
                for r in rep.results:
                    c = _DUAL.setdefault(r.name, [0, 0])
                    c[0] += not r.passed
                    c[1] += 1
    return _DUAL


DUAL_IDENTITIES = [
    "sum: plain original, dual image",
    "sum: dual original, plain image",
    "sum: dual both sides",
    "scale: plain original, dual image",
    "scale: dual original, plain image",
    "scale: dual both sides",
    "product: plain original, dual convolution",
    "product: dual original, plain convolution",
    "product: dual both sides",
    "energy: dual original, plain image",
    "energy: plain original, dual image",
    "energy: dual both sides",
    "energy: complement-square balance",
]


def c8_transform(name):
    def run():
        f, t = dual_counts()[name]
        return f == 0, f"{t - f}/{t} random pairs hold"
    run.__name__ = name
    return run


def c9_pairs():
    rng = random.Random(SEED)
    bad_var = 0
    for _ in range(1000):
        a, b, c, d = (rng.randrange(-1000, 1000) for _ in range(4))
        A, B = pairs.PairElement(a, b), pairs.PairElement(c, d)
        for v in (1, 2, 3, 4):
            m = pairs.variant_matrix(A, v)
            want = (m[0][0] * c + m[0][1] * d, m[1][0] * c + m[1][1] * d)
            bad_var += tuple(pairs.pair_cross(A, B, v)) != want
    oracle_ok = all(
        tuple(pairs.pair_cross(pairs.PairElement(2, 1), pairs.PairElement(3, 4), v)) == w
        for v, w in ((1, (2, 11)), (2, (10, -5)))
    )
    det_ok = all(
        pairs.determinant(pairs.variant_matrix(pairs.PairElement(a, b), 0)) == a * a - b * b
        and pairs.determinant(pairs.variant_matrix(pairs.PairElement(a, a), 0)) == 0
        for a, b in ((rng.randrange(-99, 99), rng.randrange(-99, 99)) for _ in range(200))
    )
    per_ok = True
    for _ in range(100):
        s = pairs.PairElement(rng.randrange(-9, 10), rng.randrange(-9, 10))
        q = s.first**2 + s.second**2
        for k in range(5):
            per_ok &= pairs.pair_pow(s, 2 * k, 2) == pairs.PairElement(q**k, 0)
            per_ok &= pairs.pair_pow(s, 2 * k + 1, 2) == pairs.PairElement(q**k * s.first, q**k * s.second)
    diag = pairs.pair_diagnostic(pairs.pair_plan(pairs.PairElement(2, 1), 3, 2), samples=20, seed=SEED)
    report = diag.lines()
    ok = bad_var == 0 and oracle_ok and det_ok and per_ok and len(report) >= 4
    rt = diag.roundtrip_with_inverse_n
    return ok, (
        f"variants {4000 - bad_var}/4000, determinant {'ok' if det_ok else 'bad'}, "
        f"period-2 {'ok' if per_ok else 'bad'}, diagnostic emitted (round trip reported: {rt})"
    )


CRITERIA = (
    [("1", "N=3 matrix example", c1_matrix_example),
     ("2", "fundamental theorem sweep", c2_fundamental_sweep),
     ("3", "regime coverage round trips", c3_regime_coverage),
     ("4", "convolution oracles", c4_convolution_oracles)]
    + [(f"5.{i + 1}", name, c5(name)) for i, name in enumerate([
        "linearity", "sum", "shift, positive offset", "shift, negative offset",
        "image weighting shifts the original", "image convolution of a product",
        "original convolution", "Wiener-Khinchin", "converse Wiener-Khinchin", "Parseval"])]
    + [("6", "rebase two-path equality", c6_rebase_two_path),
       ("7", "Gaussian round trip", c7_gaussian_round_trip)]
    + [(f"8.{i + 1}", name, c8_scalar(name)) for i, name in enumerate(SCALAR_DUALS)]
    + [(f"8.{i + 4}", name, c8_transform(name)) for i, name in enumerate(DUAL_IDENTITIES)]
    + [("9", "pair ring", c9_pairs)]
)


def evaluate(cid, title, fn):
    ok, detail = fn()
    line = f"criterion {cid:<5} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    print(line)
    return ok, line


@pytest.mark.parametrize("cid, title, fn", CRITERIA, ids=[f"{c[0]}-{c[1]}" for c in CRITERIA])
def test_criterion(cid, title, fn):
    ok, line = evaluate(cid, title, fn)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c)[0] for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)

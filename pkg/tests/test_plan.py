from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stransform.errors import (
    ExistenceConditionFailed,
    InvalidParameter,
    NoPlanFound,
    NotInvertible,
    OrderMismatch,
)
from stransform.numbers import divisors, factorize, is_prime, prime_power
from stransform.plan import (
    Regime,
    RegimeKind,
    make_plan,
    plan_from_json,
    plan_search,
    plan_to_dict,
    plan_to_json,
    smallest_plan,
)


def check_invariants(plan):
    """Re-derive the three plan invariants from scratch."""
    s, N, M = plan.s, plan.N, plan.M
    assert pow(s, N, M) == 1
    assert all(pow(s, d, M) != 1 for d in range(1, N) if N % d == 0)
    assert plan.inv_n.residue * N % M == 1
    for d in range(N):
        total = sum(pow(s, d * k % N, M) for k in range(N)) % M
        assert total == (N % M if d == 0 else 0), d


def test_standard_plans_valid(plan):
    check_invariants(plan)


def test_mersenne_example():
    p = make_plan(2, 5, Regime.prime())
    assert (p.M, p.inv_n.residue) == (31, 25)
    assert make_plan(2, 5, Regime.mersenne()).M == 31


def test_fermat_example():
    assert make_plan(2, 8, Regime.fermat(4)).M == 17


def test_pseudo_fermat_example():
    p = make_plan(2, 4, Regime.pseudo_fermat())
    assert (p.M, p.inv_n.residue) == (5, 4)


def test_pseudo_fermat_reduces_base():
    assert make_plan(7, 4, Regime.pseudo_fermat()).s == 2


def test_composite_prime_n_rejected_by_existence():
    with pytest.raises(ExistenceConditionFailed) as info:
        make_plan(3, 4, Regime.prime())
    assert info.value.d == 2


def test_order_mismatch():
    # 4 = -1 mod 5 has order 2, not 4
    with pytest.raises(OrderMismatch):
        make_plan(4, 4, Regime.pseudo_fermat())
    with pytest.raises(OrderMismatch):
        make_plan(2, 6, Regime.pseudo_fermat())


def test_non_invertible_length():
    # s=3, N=4 as a prime power: M = 1 + 3^2 = 10 shares the factor 2 with N
    with pytest.raises(NotInvertible):
        make_plan(3, 4, Regime.prime_power(2, 2))


def test_prime_power_modulus():
    assert make_plan(2, 9, Regime.prime_power(3, 2)).M == 1 + 2**3 + 2**6
    assert make_plan(3, 9, Regime.prime_power(3, 2)).M == 1 + 3**3 + 3**6
    assert make_plan(2, 25, Regime.prime_power(5, 2)).M == sum(2 ** (5 * m) for m in range(5))


def test_two_p_with_odd_p_fails_existence():
    with pytest.raises(ExistenceConditionFailed):
        make_plan(3, 6, Regime.two_p(3))
    with pytest.raises(ExistenceConditionFailed):
        make_plan(2, 6, Regime.two_p(3))


@pytest.mark.parametrize("s, N, regime", [
    (3, 5, Regime.mersenne()),
    (2, 6, Regime.two_p(4)),
    (2, 8, Regime.pseudo_fermat()),
    (2, 12, Regime.fermat(6)),
    (2, 9, Regime.prime_power(2, 3)),
    (2, 1, Regime.prime()),
    (1, 3, Regime.prime()),
])
def test_regime_shape_checks(s, N, regime):
    with pytest.raises(InvalidParameter):
        make_plan(s, N, regime)


def test_regime_from_name():
    assert Regime.from_name("prime-power", 9) == Regime.prime_power(3, 2)
    assert Regime.from_name("fermat", 8) == Regime.fermat(4)
    assert Regime.from_name("two-p", 4).p == 2
    assert Regime.from_name("pseudo-fermat", 4).kind is RegimeKind.PSEUDO_FERMAT
    with pytest.raises(InvalidParameter):
        Regime.from_name("prime-power", 12)
    with pytest.raises(InvalidParameter):
        Regime.from_name("sawtooth", 4)


def test_make_plan_accepts_name():
    assert make_plan(2, 5, "mersenne") == make_plan(2, 5, Regime.mersenne())


def test_composite_n_rejected_with_geometric_modulus():
    # composite N outside the sanctioned shapes, geometric modulus
    for N in (4, 6, 8, 9, 10, 12, 15):
        for s in range(2, 6):
            with pytest.raises((ExistenceConditionFailed, NotInvertible, OrderMismatch)):
                make_plan(s, N, Regime.prime())


def test_prime_power_factorization_identity():
    for s in range(2, 6):
        for p in (2, 3):
            for n in (2, 3):
                N = p**n
                lhs = sum(s**m for m in range(N))
                a = sum(s**k for k in range(p ** (n - 1)))
                b = sum((s ** (p ** (n - 1))) ** m for m in range(p))
                assert lhs == a * b


def test_two_p_factorization_identity():
    for s in range(2, 6):
        for p in range(1, 7):
            assert sum(s**m for m in range(2 * p)) == (s**p + 1) * sum(s**n for n in range(p))


def test_search_contains_known_plan():
    found = plan_search(5, 100)
    assert any((p.s, p.N, p.M) == (3, 5, 121) for p in found)
    Ms = [p.M for p in found]
    assert Ms == sorted(Ms)
    for p in found:
        assert p.N >= 5 and p.M >= 100
        check_invariants(p)


def test_search_small_and_preferred():
    assert plan_search(2, 2)
    found = plan_search(5, 100, preferred_s=7)
    assert found[0].s == 7


def test_search_outside_window():
    with pytest.raises(NoPlanFound):
        plan_search(10**6, 2)
    with pytest.raises(NoPlanFound):
        smallest_plan(10**6, 2)


def test_smallest_plan_is_minimal():
    best = smallest_plan(5, 100)
    assert best.M == min(p.M for p in plan_search(5, 100))


def test_json_round_trip(plan):
    doc = plan_to_dict(plan)
    assert set(doc) == {"s", "n", "m", "regime", "inv_n"}
    assert all(isinstance(v, str) for v in doc.values())
    assert plan_from_json(plan_to_json(plan)) == plan


def test_json_rejects_tampering():
    doc = plan_to_dict(make_plan(2, 5, "prime"))
    with pytest.raises(InvalidParameter):
        plan_from_json('{"s": "2", "n": "5", "m": "32", "regime": "prime", "inv_n": "25"}')
    with pytest.raises(InvalidParameter):
        plan_from_json('{"s": "2", "regime": "prime"}')
    assert doc["m"] == "31"


def test_number_helpers():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert prime_power(27) == (3, 3) and prime_power(12) is None and prime_power(7) == (7, 1)
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 12), st.integers(2, 40))
def test_every_constructed_plan_is_valid(s, N):
    for regime in ("prime", "pseudo-fermat"):
        try:
            p = make_plan(s, N, regime)
        except (InvalidParameter, NotInvertible):
            continue
        check_invariants(p)
        assert gcd(p.N, p.M) == 1

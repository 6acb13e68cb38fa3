"""Picking transform parameters.

A plan fixes the base s, the length N and the modulus M. Each regime builds
M from s and N in its own way; make_plan rejects anything whose weights do
not have order N or whose existence sums do not vanish.
"""

from stransform import InvalidParameter, Regime, make_plan, plan_search, smallest_plan
from stransform.plan import plan_to_json

for s, N, regime in [
    (2, 5, Regime.mersenne()),
    (2, 8, Regime.fermat(4)),
    (3, 5, Regime.prime()),
    (2, 9, Regime.prime_power(3, 2)),
    (4, 4, Regime.two_p(2)),
    (2, 4, Regime.pseudo_fermat()),
]:
    plan = make_plan(s, N, regime)
    print(f"{plan}   weights {list(plan.powers)}")

# s=3, N=4: an existence sum does not vanish, so this is refused
try:
    make_plan(3, 4, Regime.prime())
except InvalidParameter as exc:
    print("rejected:", exc)

# when only sizes matter, let the search pick
print("smallest with N>=16, M>=10**6:", smallest_plan(16, 10**6))
print("first three candidates:", [str(p) for p in plan_search(16, 10**6)[:3]])

# plans serialize to JSON with big integers as decimal strings
print(plan_to_json(make_plan(2, 61, Regime.mersenne()))[:120], "...")

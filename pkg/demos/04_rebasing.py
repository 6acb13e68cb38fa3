"""Moving an image from one base to another over the product modulus.

The kernel is built over M1*M2. The two-path check compares the rebased
image against a direct transform; for the N=3 pair below it almost never
agrees, so rebase_image refuses unless check=False.
"""

from stransform import ConsistencyViolation, Regime, forward, make_pair, make_plan, rebase_image

pair = make_pair(make_plan(2, 3, Regime.prime()), make_plan(3, 3, Regime.prime()))
print("moduli", pair.plan1.M, pair.plan2.M)

x = [1, 2, 3]
image2 = forward(pair.plan2, x)
try:
    rebase_image(pair, image2)
except ConsistencyViolation as exc:
    print("checked rebase refused:", exc)

got = rebase_image(pair, image2, check=False)
print("unchecked result:", got.values)
print("reduced mod M1:", [v % pair.plan1.M for v in got.values])
print("direct image:  ", forward(pair.plan1, x).values)

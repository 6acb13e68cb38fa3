"""Complement duality: a' = 1 - a mod M.

Scalar rules are checked exhaustively for M = 13, then the transform-level
identities on one random pair. The energy rows report False; they are
equivalent to the plain sum-of-squares equality, which fails.
"""

import random

from stransform import RingModulus, Regime, complement, dual_product, dual_sum, dual_theorem_suite, make_plan

m = RingModulus(13)
els = [m.element(v) for v in range(13)]
ok = all(dual_sum(a, b).residue == (a.residue + b.residue) % 13 for a in els for b in els)
ok &= all(dual_product(a, b).residue == a.residue * b.residue % 13 for a in els for b in els)
print("scalar duals hold for all 169 pairs:", ok)
print("complement of 4:", complement(m.element(4)))

plan = make_plan(2, 5, Regime.mersenne())
rng = random.Random(3)
x = [rng.randrange(plan.M) for _ in range(plan.N)]
y = [rng.randrange(plan.M) for _ in range(plan.N)]
for r in dual_theorem_suite(plan, x, y, mu=7).results:
    print(f"  {'ok ' if r.passed else 'BAD'} {r.name}")

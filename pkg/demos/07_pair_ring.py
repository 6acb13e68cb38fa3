"""Integer pairs with matrix-style cross products.

Variant 1 is Gaussian multiplication. Variant 2 squares every element to a
multiple of <1,0>, which is what the pair transform relies on. The
diagnostic shows the resulting transform does not invert for s = <2,1>.
"""

from stransform import PairElement as P, pair_cross, pair_diagnostic, pair_plan, pair_pow

s = P(2, 1)
for v in (1, 2, 3, 4):
    print(f"variant {v}: <2,1> x <3,4> = {pair_cross(s, P(3, 4), v)}")

print("variant 2 powers:", [str(pair_pow(s, m, 2)) for m in range(6)])

plan = pair_plan(s, 3, variant=2)
print("\n".join(pair_diagnostic(plan, samples=10, seed=0).lines()))

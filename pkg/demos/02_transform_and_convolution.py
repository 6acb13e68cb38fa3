"""Forward and inverse transforms, then exact convolution."""

from stransform import Regime, convolve_exact_integers, cyclic_convolve, forward, inverse, make_plan, matrices
from stransform.transform import mat_mul

plan = make_plan(3, 3, Regime.prime())
fwd, inv = matrices(plan)
print("forward matrix", fwd.entries)
print("inverse (unscaled)", inv.entries)
# the product is N times the identity
print("product", mat_mul(fwd.entries, inv.entries, plan.M))

plan = make_plan(2, 5, Regime.mersenne())
x = [1, 2, 3, 4, 5]
X = forward(plan, x)
print(f"{x} -> {X.values} -> {inverse(plan, X).values}")

y = [0, 1, 0, 0, 0]
print("cyclic convolution with a unit shift:", cyclic_convolve(plan, x, y).values)

# integers, no wraparound: the plan is chosen large enough automatically
a = [123456789, 0, 987654321]
b = [10**12, 3]
print("exact product coefficients:", convolve_exact_integers(a, b))

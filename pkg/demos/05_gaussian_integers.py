"""The transform over Gaussian integers with s = 2+i, N = 3."""

from stransform import GaussianElement as G, gauss_forward, gauss_inverse, make_gaussian_plan
from stransform.gaussian import gauss_congruent, gauss_reduce

plan = make_gaussian_plan(G(2, 1), 3)
print("modulus", plan.modulus, "norm", plan.norm.value)

# reduction rounds the quotient to the nearest Gaussian integer
print("reduce 100+7i ->", gauss_reduce(G(100, 7), plan.modulus))

z = [G(1, 2), G(3, 4), G(5, 6)]
Z = gauss_forward(plan, z)
back = gauss_inverse(plan, Z)
print("image", [str(v) for v in Z])
print("back ", [str(v) for v in back])
print("congruent to input:", all(gauss_congruent(a, b, plan.modulus) for a, b in zip(back, z)))

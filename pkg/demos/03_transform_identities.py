"""Checking transform identities on a concrete sequence.

Most identities hold exactly. The sum-of-squares comparison does not in
general; its correct form pairs y(i) with y(-i) and carries a factor N.
"""

from stransform import Regime, autocorrelation, forward, make_plan, shift_image
from stransform.theorems import parseval_check, parseval_reflected

plan = make_plan(2, 5, Regime.mersenne())
y = [1, 2, 3, 4, 5]

print("shifted by 2 through the image:", shift_image(plan, y, 2).values)
print("autocorrelation:", autocorrelation(plan, y).values)

lhs, rhs = parseval_check(plan, y)
print(f"sum y^2 = {int(lhs)}, sum Y^2 = {int(rhs)}  (equal: {lhs == rhs})")
lhs, rhs = parseval_reflected(plan, y)
print(f"N sum y(i)y(-i) = {int(lhs)}, sum Y^2 = {int(rhs)}")

Y = forward(plan, y)
print("image:", Y.values)

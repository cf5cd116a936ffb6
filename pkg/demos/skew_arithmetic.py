"""
==========================
Skew polynomial arithmetic
==========================

Elements of ``K[x][t; sigma, d]`` are stored in left normal form
``sum a_i(x) t^i``. Multiplication moves ``t`` past coefficients with the
rule ``t*a = sigma(a)*t + d(a)``.
"""

# %%
# The Weyl algebra
# ----------------
#
# With ``sigma = id`` and ``d = d/dx`` we get ``t*x = x*t + 1``.

from orext import DerivationSpec, Poly, SkewPoly, parse_skew, right_divide, right_normal_form

weyl = DerivationSpec.ordinary(1)
t = SkewPoly.theta(weyl)
x = SkewPoly([Poly.x()], weyl)
print("t*x     =", t * x)
print("t^2*x   =", t**2 * x)
print("t^3*x^2 =", parse_skew("t^3*x^2", weyl))

# %%
# A quantum plane
# ---------------
#
# ``sigma(x) = 3x`` and ``d = 0`` gives ``t*x = 3*x*t``.

plane = DerivationSpec(3, 0, 0)
print(SkewPoly.theta(plane) * Poly.x())

# %%
# Right normal form
# -----------------
#
# Every element can also be written ``sum t^i c_i(x)``.

f = parse_skew("x*t^2", weyl)
print([str(c) for c in right_normal_form(f)])  # x*t^2 = t^2*x - 2*t

# %%
# Division on the right
# ---------------------
#
# When the divisor has a unit leading coefficient, ``f = q*g + r`` with
# ``deg r < deg g``.

g = t**2 + x * t
q, r = right_divide(t**3, g)
print("q =", q)
print("r =", r)
assert q * g + r == t**3

"""
Valuations on Q and on Q(x)
===========================

A valuation counts how many times a prime divides a number. Everything
here is exact; there are no floats.
"""

from fractions import Fraction

from ultraspec import AbsValue, abs_p, vp_rat
from ultraspec.numeric import Poly, RationalFunction
from ultraspec.valuations import FinitePlace, InfinitePlace, ring_membership, vfunc_inf, vfunc_px

# 50 = 2 * 5^2, and 7 carries no factor of 5
print("V_5(50/7) =", vp_rat(5, Fraction(50, 7)))
print("V_3(7/9)  =", vp_rat(3, Fraction(7, 9)))
print("V_5(0)    =", vp_rat(5, 0))

# the absolute value is stored as an exponent of p, never as a float
a = abs_p(3, Fraction(7, 9))
print(a, "=", a.value)

# large powers of p are small
for k in range(4):
    print(f"|5^{k}|_5 =", abs_p(5, 5**k).value)

# every integer has |n|_p <= 1
one = AbsValue.ppow(7, 0)
assert all(abs_p(7, n) <= one for n in range(-1000, 1001))

# %%
# The same construction on rational functions: a place is an irreducible
# polynomial, or the place at infinity which counts degree.
x = Poly.x()
f = RationalFunction((x - 1) ** 2, x + 2)
print("V_{x-1}(f) =", vfunc_px(f, x - 1))
print("V_inf(x/(x^2+1)) =", vfunc_inf(RationalFunction(x, x**2 + 1)))

print(ring_membership(RationalFunction(x - 1, x + 2), FinitePlace(x - 1)).to_json())
print(ring_membership(RationalFunction(Poly.const(3)), InfinitePlace()).to_json())

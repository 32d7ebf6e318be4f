"""
p-adic digits and series
========================

A rational with denominator prime to p has a digit expansion in base p
that runs to the left. Here -1/4 = 1 + 5 + 25 + ... in Q_5.
"""

from fractions import Fraction

from ultraspec import ConvergenceError, SequenceOracle, approx_from_rational, cauchy_check, sum_series
from ultraspec.padic import approx_mul
from ultraspec.valuations import PAdicContext, vp_rat

ctx = PAdicContext(5)
a = approx_from_rational(ctx, Fraction(-1, 4), 8)
print(a.to_json(), "->", a)
print("V_5(-1/4 - repr) =", vp_rat(5, Fraction(-1, 4) - a.representative()))

# 1/5 needs a digit to the right of the point
print(approx_from_rational(ctx, Fraction(1, 5), 2).to_json())

# truncated expansions multiply like the rationals they approximate
print(approx_mul(approx_from_rational(ctx, 2, 4), approx_from_rational(ctx, Fraction(1, 2), 4)))

# %%
# A series converges exactly when its terms tend to 0. The tail bound is a
# promise about the terms; the library checks it as it sums.
geo = SequenceOracle(ctx, lambda n: Fraction(5) ** n, tail=lambda n: n, name="5^n")
s = sum_series(geo, 6, 100)
print("sum 5^n =", s.representative(), "mod 5^6; 1/(1-5) =", Fraction(1, -4))

partial = SequenceOracle(ctx, lambda n: sum(Fraction(5) ** k for k in range(n + 1)), tail=lambda n: n + 1)
print(cauchy_check(partial, 8).to_json())

try:
    sum_series(SequenceOracle(ctx, lambda n: 1), 3, 50)
except ConvergenceError as exc:
    print("constant terms:", exc)

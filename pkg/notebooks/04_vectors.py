"""
The max norm on K^t
===================

The norm of a vector is its largest coordinate absolute value. The
plain bilinear form satisfies Cauchy-Schwarz, and coordinate subspaces
have coordinate complements.
"""

import random
from fractions import Fraction

from ultraspec import abs_p, inner_omega, inner_t, norm_max
from ultraspec.vectors import coord_complement

print(norm_max(5, [1, 5, 25]).value, norm_max(2, [Fraction(1, 2), 4]).value)
print(inner_t([1, 2], [3, 4]), inner_omega([2, 3], [1, 1], [1, 1]), inner_omega([1, -1], [1, 1], [1, 1]))

rng = random.Random(0)
for _ in range(2000):
    t = rng.randint(1, 6)
    x = [Fraction(rng.randint(-40, 40), rng.randint(1, 40)) for _ in range(t)]
    y = [Fraction(rng.randint(-40, 40), rng.randint(1, 40)) for _ in range(t)]
    lhs, rhs = abs_p(3, inner_t(x, y)), norm_max(3, x) * norm_max(3, y)
    assert lhs <= rhs
print("Cauchy-Schwarz held on 2000 random pairs")

print(sorted(coord_complement({0, 2}, 4)))

"""
Balls in an ultrametric space
=============================

With the p-adic distance every triangle is isosceles, every point of a
ball is a center, and two balls are either nested or disjoint.
"""

from fractions import Fraction

from ultraspec import Ball, ball_contains, balls_relation, isosceles_witness

p = 5
small = Ball.of(p, 0, Fraction(1, 5))
big = Ball.of(p, 3, 1)
print(small, "vs", big, "->", balls_relation(p, small, big).value)
print(small, "vs", Ball.of(p, 1, Fraction(1, 5)), "->", balls_relation(p, small, Ball.of(p, 1, Fraction(1, 5))).value)

# the open ball of radius 1 is the closed ball of radius 1/5
print(balls_relation(p, Ball.of(p, 0, 1, "open"), Ball.of(p, 0, Fraction(1, 5))).value)

# move the center of B(0, 1) to 3: the ball does not change
moved = big.recentered(0)
print(all(ball_contains(p, big, Fraction(a, b)) == ball_contains(p, moved, Fraction(a, b))
          for a in range(-50, 51) for b in range(1, 20)))

# %%
# Triangles. The two longest sides always agree.
for q, pts in [(5, (0, 1, 5)), (3, (0, 3, 6)), (2, (0, 1, 2))]:
    r = isosceles_witness(q, *pts)
    print(f"p={q}", pts, {k: str(v.value) for k, v in r.sides.items()}, "equal:", r.equal_pair)

import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from ultraspec.geometry import (
    Ball,
    Relation,
    ball_contains,
    balls_relation,
    isosceles_witness,
    recenter_equivalent,
    sphere_contains,
)
from ultraspec.props import ball_dichotomy_suite, recenter_suite
from ultraspec.valuations import AbsValue, dist_p

from conftest import primes, rationals

F = Fraction


def closed(p, c, r):
    return Ball.of(p, c, r, "closed")


def test_ball_contains_examples():
    assert ball_contains(5, closed(5, 0, 1), 3)
    assert not ball_contains(5, Ball.of(5, 0, 1, "open"), 3)
    assert ball_contains(5, closed(5, 0, 1), 0)


def test_open_ball_is_smaller_closed_ball():
    b = Ball.of(5, 0, 1, "open")
    assert b.closed_exponent == -1
    assert balls_relation(5, b, closed(5, 0, F(1, 5))) is Relation.EQUAL


def test_recenter_examples():
    b = closed(5, 0, 1)
    assert recenter_equivalent(5, b, 3)
    rng = random.Random(7)
    moved = b.recentered(3)
    for _ in range(1000):
        y = F(rng.randint(-500, 500), rng.randint(1, 500))
        assert ball_contains(5, b, y) == ball_contains(5, moved, y)
    assert not recenter_equivalent(5, closed(5, 0, F(1, 5)), 1)
    assert recenter_equivalent(3, closed(3, 2, F(1, 3)), 2)


def test_balls_relation_examples():
    assert balls_relation(5, closed(5, 0, F(1, 5)), closed(5, 3, 1)) is Relation.LEFT_INSIDE_RIGHT
    assert balls_relation(5, closed(5, 3, 1), closed(5, 0, F(1, 5))) is Relation.RIGHT_INSIDE_LEFT
    assert balls_relation(5, closed(5, 0, F(1, 5)), closed(5, 1, F(1, 5))) is Relation.DISJOINT
    assert balls_relation(5, closed(5, 0, 1), closed(5, 0, 1)) is Relation.EQUAL


def test_ball_radius_must_be_power_of_p():
    with pytest.raises(ValueError):
        Ball.of(5, 0, 3)
    with pytest.raises(ValueError):
        Ball.of(5, 0, 0)
    with pytest.raises(ValueError):
        Ball.of(5, 0, 1, "half-open")


def test_mixed_primes_rejected():
    with pytest.raises(ValueError):
        balls_relation(5, closed(5, 0, 1), closed(3, 0, 1))


def test_isosceles_examples():
    r = isosceles_witness(5, 0, 1, 5)
    assert [r.sides[k].value for k in ("xy", "yz", "xz")] == [1, 1, F(1, 5)]
    assert set(r.equal_pair) == {"xy", "yz"} and not r.equilateral
    r = isosceles_witness(3, 0, 3, 6)
    assert r.equilateral and all(s.value == F(1, 3) for s in r.sides.values())
    r = isosceles_witness(2, 0, 1, 2)
    assert [r.sides[k].value for k in ("xy", "yz", "xz")] == [1, 1, F(1, 2)]


def test_isosceles_needs_three_points():
    with pytest.raises(ValueError, match="not a triangle"):
        isosceles_witness(5, 1, 1, 2)


def test_sphere_examples():
    one = AbsValue.ppow(5, 0)
    assert sphere_contains(5, 0, one, 2)
    assert not sphere_contains(5, 0, one, 5)
    assert not sphere_contains(5, 0, one, 0)


@given(primes, rationals(), rationals(), rationals())
def test_every_triangle_is_isosceles(p, a, b, c):
    assume(len({a, b, c}) == 3)
    r = isosceles_witness(p, a, b, c)
    s = r.sides
    assert s[r.equal_pair[0]] == s[r.equal_pair[1]] >= s[r.third]


@given(primes, rationals(), st.integers(-4, 4), rationals(), st.integers(-4, 4), st.booleans(), st.booleans())
def test_relation_is_antisymmetric(p, ca, ka, cb, kb, oa, ob):
    a = Ball(ca, AbsValue.ppow(p, ka), "open" if oa else "closed")
    b = Ball(cb, AbsValue.ppow(p, kb), "open" if ob else "closed")
    flip = {
        Relation.DISJOINT: Relation.DISJOINT,
        Relation.EQUAL: Relation.EQUAL,
        Relation.LEFT_INSIDE_RIGHT: Relation.RIGHT_INSIDE_LEFT,
        Relation.RIGHT_INSIDE_LEFT: Relation.LEFT_INSIDE_RIGHT,
    }
    assert balls_relation(p, b, a) is flip[balls_relation(p, a, b)]


@given(primes, rationals(), st.integers(-4, 4), rationals())
def test_open_and_closed_balls_are_clopen(p, c, k, y):
    # a point outside the closed ball is at distance > r from every point of it
    b = Ball(c, AbsValue.ppow(p, k), "closed")
    if not ball_contains(p, b, y):
        assert dist_p(p, c, y) > b.radius
        assert not ball_contains(p, b.recentered(c + Fraction(p) ** (-k)), y)


def test_ball_dichotomy_sampled():
    res = ball_dichotomy_suite(random.Random(3), 40, 300)
    assert res.failures == 0, res.examples


def test_recenter_sampled():
    res = recenter_suite(random.Random(4), 30, 100)
    assert res.failures == 0, res.examples

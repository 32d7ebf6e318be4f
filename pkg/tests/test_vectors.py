from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ultraspec.valuations import AbsValue, abs_p
from ultraspec.vectors import (
    basis_vector,
    coord_complement,
    coord_span_contains,
    inner_omega,
    inner_t,
    norm_max,
    weights,
)

from conftest import primes, rationals

F = Fraction


def test_norm_examples():
    assert norm_max(5, [1, 5, 25]) == AbsValue.ppow(5, 0)
    assert norm_max(3, [0, 0]).is_zero()
    assert norm_max(2, [F(1, 2), 4]).value == 2


def test_inner_examples():
    assert inner_t([1, 2], [3, 4]) == 11
    assert inner_t([1, 0], [0, 1]) == 0
    assert inner_t([1, 1], [1, -1]) == 0
    assert inner_omega([1, 1], [1, 2], [3, 4]) == 11
    assert inner_omega([2, 3], [1, 1], [1, 1]) == 5
    assert inner_omega([1, -1], [1, 1], [1, 1]) == 0


def test_length_mismatch():
    with pytest.raises(ValueError):
        inner_t([1], [1, 2])
    with pytest.raises(ValueError):
        inner_omega([1], [1, 2], [1, 2])


def test_weights_nonzero():
    with pytest.raises(ValueError):
        weights([1, 0])


def test_complement_examples():
    assert coord_complement({0, 2}, 4) == {1, 3}
    assert coord_complement(set(), 3) == {0, 1, 2}
    assert coord_complement({0, 1, 2}, 3) == frozenset()
    with pytest.raises(IndexError):
        coord_complement({5}, 3)


def vectors_of(t):
    return st.lists(rationals(200, 200), min_size=t, max_size=t)


pairs = st.integers(1, 6).flatmap(lambda t: st.tuples(vectors_of(t), vectors_of(t)))


@given(primes, pairs)
def test_cauchy_schwarz(p, xy):
    x, y = xy
    assert abs_p(p, inner_t(x, y)) <= norm_max(p, x) * norm_max(p, y)


@given(primes, pairs)
def test_norm_is_ultrametric(p, xy):
    x, y = xy
    s = [a + b for a, b in zip(x, y)]
    nx, ny = norm_max(p, x), norm_max(p, y)
    assert norm_max(p, s) <= max(nx, ny)
    if nx != ny:
        assert norm_max(p, s) == max(nx, ny)


@given(primes, st.integers(1, 6).flatmap(vectors_of), rationals(200, 200))
def test_norm_is_homogeneous(p, x, c):
    assert norm_max(p, [c * a for a in x]) == abs_p(p, c) * norm_max(p, x)


@given(st.integers(1, 8).flatmap(lambda t: st.tuples(st.just(t), st.frozensets(st.integers(0, t - 1)))))
def test_double_complement_and_orthogonality(ts):
    t, s = ts
    comp = coord_complement(s, t)
    assert coord_complement(comp, t) == s
    for i in s:
        for j in comp:
            assert inner_t(basis_vector(i, t), basis_vector(j, t)) == 0
            assert coord_span_contains(s, basis_vector(i, t))
            assert not coord_span_contains(s, basis_vector(j, t))

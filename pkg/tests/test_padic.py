from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ultraspec.padic import (
    ConvergenceError,
    SequenceOracle,
    approx_add,
    approx_equal,
    approx_from_rational,
    approx_mul,
    approx_neg,
    cauchy_check,
    equivalent_at,
    sum_series,
)
from ultraspec.valuations import INF, PAdicContext, vp_rat

from conftest import primes, rationals

F = Fraction
C5, C3 = PAdicContext(5), PAdicContext(3)


def test_expansion_examples():
    a = approx_from_rational(C5, F(-1, 4), 3)
    assert (a.shift, a.digits) == (0, (1, 1, 1))
    assert vp_rat(5, F(-1, 4) - 31) >= 3
    z = approx_from_rational(C3, 0, 4)
    assert (z.shift, z.digits) == (0, (0, 0, 0, 0))
    assert z.valuation() is INF
    b = approx_from_rational(C5, F(1, 5), 2)
    assert (b.shift, b.digits) == (-1, (1, 0, 0))


def test_arithmetic_examples():
    s = approx_add(approx_from_rational(C5, F(1, 4), 4), approx_from_rational(C5, F(-1, 4), 4))
    assert s.precision == 4 and s.representative() == 0
    m = approx_mul(approx_from_rational(C5, 2, 4), approx_from_rational(C5, F(1, 2), 4))
    assert m.precision == 4 and m.representative() == 1
    t = approx_add(approx_from_rational(C3, F(1, 4), 3), approx_from_rational(C3, F(1, 4), 3))
    assert approx_equal(t, approx_from_rational(C3, F(1, 2), 3))


def test_mixed_primes_rejected():
    with pytest.raises(ValueError):
        approx_add(approx_from_rational(C5, 1, 2), approx_from_rational(C3, 1, 2))


def test_cauchy_examples():
    partial = SequenceOracle(C5, lambda n: sum(F(5) ** k for k in range(n + 1)), lambda n: n + 1)
    r = cauchy_check(partial, 8)
    assert r.verdict == "cauchy-certified"
    assert list(r.diff_valuations) == list(range(1, 8))

    alt = SequenceOracle(C5, lambda n: n % 2)
    r = cauchy_check(alt, 8)
    assert r.verdict == "prefix-consistent"
    assert set(r.diff_valuations) == {0}
    claimed = SequenceOracle(C5, lambda n: n % 2, lambda n: n + 1)
    r = cauchy_check(claimed, 8)
    assert r.verdict == "prefix-refuted" and r.violations

    const = SequenceOracle(C5, lambda n: F(7, 3), lambda n: INF)
    r = cauchy_check(const, 6)
    assert r.verdict == "cauchy-certified"
    assert all(v is INF for v in r.diff_valuations)


def test_sum_series_examples():
    geo = SequenceOracle(C5, lambda n: F(5) ** n, lambda n: n)
    s = sum_series(geo, 6, 100)
    assert vp_rat(5, s.representative() - F(-1, 4)) >= 6
    zero = SequenceOracle(C3, lambda n: 0, lambda n: INF)
    assert sum_series(zero, 5, 10).representative() == 0
    ones = SequenceOracle(C5, lambda n: 1)
    with pytest.raises(ConvergenceError):
        sum_series(ones, 1, 100)


def test_sum_series_catches_false_tail():
    liar = SequenceOracle(C5, lambda n: 1, lambda n: n)
    with pytest.raises(ConvergenceError, match="tail"):
        sum_series(liar, 4, 100)


def test_sum_series_budget():
    slow = SequenceOracle(C5, lambda n: F(5) ** n, lambda n: n)
    with pytest.raises(ConvergenceError):
        sum_series(slow, 50, 10)


def test_equivalent_at():
    a = SequenceOracle(C5, lambda n: sum(F(5) ** k for k in range(n + 1)), lambda n: n + 1)
    b = SequenceOracle(C5, lambda n: F(-1, 4), lambda n: INF)
    assert equivalent_at(a, b, 6, 12)
    c = SequenceOracle(C5, lambda n: F(1, 4), lambda n: INF)
    assert not equivalent_at(a, c, 6, 12)


def p_integral(p):
    return rationals(500, 500).filter(lambda x: x.denominator % p != 0)


@given(primes.flatmap(lambda p: st.tuples(st.just(p), p_integral(p), p_integral(p))), st.integers(1, 12))
def test_ring_homomorphism(args, n):
    p, a, b = args
    ctx = PAdicContext(p)
    A, B = approx_from_rational(ctx, a, n), approx_from_rational(ctx, b, n)
    s, m = approx_add(A, B), approx_mul(A, B)
    assert approx_equal(s, approx_from_rational(ctx, a + b, s.precision))
    assert approx_equal(m, approx_from_rational(ctx, a * b, m.precision))
    assert approx_equal(approx_add(A, approx_neg(A)), approx_from_rational(ctx, 0, n))


@given(primes, rationals(), st.integers(-3, 12))
def test_representative_is_close(p, a, n):
    A = approx_from_rational(p, a, n)
    assert A.precision == n
    assert vp_rat(p, A.representative() - a) >= n
    assert all(0 <= d < p for d in A.digits)


@given(primes, st.integers(1, 12))
def test_geometric_partial_sums(p, n):
    partial = sum((F(p) ** k for k in range(n)), F(0))
    assert vp_rat(p, partial - F(1, 1 - p)) >= n

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ultraspec.linalg import (
    bareiss_rank,
    char_poly,
    determinant,
    identity,
    mat_mul,
    mat_vec,
    matrix,
    nullspace,
    rational_roots,
    root_candidates,
    rref,
)
from ultraspec.numeric import Poly

from conftest import rationals

F = Fraction


def test_char_poly_examples():
    assert char_poly(matrix([[1, 1, 1], [0, 3, 1], [0, 0, 3]])) == Poly.from_roots([1, 3, 3])
    assert char_poly(matrix([[2, 0], [0, 2]])) == Poly.from_roots([2, 2])
    f = char_poly(matrix([[0, 1], [1, 0]]))
    assert f == Poly([-1, 0, 1])
    assert rational_roots(f) == {F(1): 1, F(-1): 1}


def test_rational_roots_with_multiplicity():
    f = Poly.from_roots([0, 0, 1, 3, 3, F(-1, 2)])
    assert rational_roots(f) == {F(-1, 2): 1, F(0): 2, F(1): 1, F(3): 2}
    assert rational_roots(Poly([1, 0, 1])) == {}
    assert root_candidates(Poly([-1, 0, 4])) == [F(-1), F(-1, 2), F(-1, 4), F(1, 4), F(1, 2), F(1)]


def test_zero_polynomial_has_no_candidate_list():
    with pytest.raises(ValueError):
        root_candidates(Poly())


def test_ragged_matrix():
    with pytest.raises(ValueError):
        matrix([[1, 2], [3]])


def test_determinant_and_rank():
    a = matrix([[F(1, 2), 1], [3, 4]])
    assert determinant(a) == F(1, 2) * 4 - 3
    assert bareiss_rank(matrix([[1, 2], [2, 4]])) == 1
    assert determinant(matrix([[1, 2], [2, 4]])) == 0
    assert determinant(()) == 1


small = rationals(6, 4)
square = st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n))


def cofactor_det(a):
    if len(a) == 1:
        return a[0][0]
    return sum(((-1) ** j * a[0][j] * cofactor_det([r[:j] + r[j + 1:] for r in a[1:]]) for j in range(len(a))), F(0))


@given(square)
def test_determinant_matches_cofactor_expansion(rows):
    a = matrix(rows)
    assert determinant(a) == cofactor_det([list(r) for r in a])


@given(square)
def test_rank_nullity_and_kernel(rows):
    a = matrix(rows)
    n = len(a)
    ker = nullspace(a, n)
    assert bareiss_rank(a) + len(ker) == n
    assert len(rref(a)[1]) == bareiss_rank(a)
    for v in ker:
        assert all(c == 0 for c in mat_vec(a, v))


@given(square)
def test_cayley_hamilton_and_roots(rows):
    a = matrix(rows)
    n = len(a)
    f = char_poly(a)
    assert f.degree == n and f.is_monic()
    assert f.coeffs[0] == (-1) ** n * determinant(a)
    # Cayley-Hamilton: f(A) = 0
    acc = tuple(tuple(F(0) for _ in range(n)) for _ in range(n))
    for c in reversed(f.coeffs):
        acc = mat_mul(acc, a)
        acc = tuple(tuple(x + (c if i == j else 0) for j, x in enumerate(r)) for i, r in enumerate(acc))
    assert all(x == 0 for r in acc for x in r)
    for r in rational_roots(f):
        shifted = tuple(tuple((r if i == j else 0) - x for j, x in enumerate(row)) for i, row in enumerate(a))
        assert determinant(shifted) == 0


def test_identity():
    assert mat_mul(identity(3), matrix([[1, 2, 3]] * 3)) == matrix([[1, 2, 3]] * 3)

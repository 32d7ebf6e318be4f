"""Exact rational linear algebra for small dense matrices.

Two independent routes are kept on purpose: integer Bareiss elimination
for rank/determinant, and Gauss-Jordan over Fraction for kernels. The
characteristic polynomial comes from Faddeev-LeVerrier, which uses no
elimination at all.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Sequence

from .numeric import Poly

__all__ = [
    "Matrix",
    "matrix",
    "identity",
    "mat_mul",
    "mat_vec",
    "bareiss_rank",
    "determinant",
    "rref",
    "nullspace",
    "char_poly",
    "root_candidates",
    "rational_roots",
]

Matrix = tuple[tuple[Fraction, ...], ...]


def matrix(rows: Sequence[Sequence]) -> Matrix:
    out = tuple(tuple(Fraction(x) for x in r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in cols) for r in a)


def mat_vec(a: Matrix, x: Sequence) -> tuple[Fraction, ...]:
    return tuple(sum((c * v for c, v in zip(r, x)), Fraction(0)) for r in a)


def _integer_rows(a: Matrix) -> list[list[int]]:
    rows = []
    for r in a:
        m = lcm(*(x.denominator for x in r)) if r else 1
        rows.append([int(x * m) for x in r])
    return rows


def _bareiss(a: Matrix) -> tuple[int, list[list[int]], int]:
    """Fraction-free row echelon form. Returns (rank, rows, sign of row swaps)."""
    m = _integer_rows(a)
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    prev, rank, sign = 1, 0, 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if m[i][col] != 0), None)
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
            sign = -sign
        pr = m[rank]
        for i in range(rank + 1, nrows):
            ri = m[i]
            f = ri[col]
            for j in range(col + 1, ncols):
                num = pr[col] * ri[j] - f * pr[j]
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("inexact Bareiss division")
                ri[j] = q
            ri[col] = 0
        prev = pr[col]
        rank += 1
    return rank, m, sign


def bareiss_rank(a: Matrix) -> int:
    return _bareiss(a)[0]


def determinant(a: Matrix) -> Fraction:
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    for r in a:
        scale *= lcm(*(x.denominator for x in r))
    rank, m, sign = _bareiss(a)
    if rank < n:
        return Fraction(0)
    return Fraction(sign * m[n - 1][n - 1]) / scale


def rref(a: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; pivot = first row with a nonzero entry."""
    m = [list(r) for r in a]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return m, pivots


def nullspace(a: Matrix, ncols: int | None = None) -> list[tuple[Fraction, ...]]:
    """Basis of {x : a x = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    if not a:
        return [tuple(Fraction(int(i == j)) for i in range(ncols)) for j in range(ncols)]
    m, pivots = rref(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        x = [Fraction(0)] * ncols
        x[fcol] = Fraction(1)
        for row, pcol in enumerate(pivots):
            x[pcol] = -m[row][fcol]
        basis.append(tuple(x))
    return basis


def char_poly(a: Matrix) -> Poly:
    """det(xI - A) by Faddeev-LeVerrier."""
    n = len(a)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    ident = identity(n)
    a_m = tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n))  # A @ M_{k-1}, M_0 = 0
    c = Fraction(1)
    for k in range(1, n + 1):
        m_k = tuple(
            tuple(x + c * ident[i][j] for j, x in enumerate(row)) for i, row in enumerate(a_m)
        )
        a_m = mat_mul(a, m_k)
        c = -sum((a_m[i][i] for i in range(n)), Fraction(0)) / k
        coeffs[n - k] = c
    return Poly(coeffs)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _primitive_integer_coeffs(f: Poly) -> list[int]:
    m = lcm(*(c.denominator for c in f.coeffs))
    ints = [int(c * m) for c in f.coeffs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints]


def root_candidates(f: Poly) -> list[Fraction]:
    """Every rational that the rational root test allows as a root of f."""
    if f.is_zero():
        raise ValueError("the zero polynomial has every number as a root")
    ints = _primitive_integer_coeffs(f)
    low = next(i for i, x in enumerate(ints) if x != 0)
    ints = ints[low:]
    cands = {Fraction(0)} if low else set()
    if len(ints) > 1:
        for num in _divisors(ints[0]):
            for den in _divisors(ints[-1]):
                cands.add(Fraction(num, den))
                cands.add(Fraction(-num, den))
    return sorted(cands)


def rational_roots(f: Poly) -> dict[Fraction, int]:
    """Rational roots of f with multiplicities, via the rational root test."""
    roots: dict[Fraction, int] = {}
    cur = f
    for r in root_candidates(f):
        k = 0
        while cur.degree >= 1 and cur(r) == 0:
            cur = cur // Poly([-r, 1])
            k += 1
        if k:
            roots[r] = k
    return roots

"""Finite truncations of K^t and E_omega: max norm, bilinear forms, coordinate spans.

Vectors are tuples of Fraction. Two forms are provided: the plain
``inner_t(x, y) = sum x_r y_r`` and the weighted
``inner_omega(w, u, v) = sum w_i u_i v_i``. Neither conjugates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .numeric import rational
from .valuations import AbsValue, _ctx, abs_p

__all__ = [
    "Vec",
    "vec",
    "weights",
    "basis_vector",
    "norm_max",
    "inner_t",
    "inner_omega",
    "coord_complement",
    "coord_span_contains",
]

Vec = tuple[Fraction, ...]


def vec(values: Iterable) -> Vec:
    return tuple(rational(v) for v in values)


def weights(values: Iterable) -> Vec:
    w = vec(values)
    if any(x == 0 for x in w):
        raise ValueError("weights must be nonzero")
    return w


def basis_vector(i: int, t: int) -> Vec:
    if not 0 <= i < t:
        raise IndexError(f"basis index {i} out of range for dimension {t}")
    return tuple(Fraction(int(j == i)) for j in range(t))


def _check_len(*vs: Sequence) -> int:
    n = len(vs[0])
    if any(len(v) != n for v in vs[1:]):
        raise ValueError(f"length mismatch: {[len(v) for v in vs]}")
    return n


def norm_max(ctx, x: Sequence) -> AbsValue:
    """max_r |x_r|_p; the zero absolute value for the zero vector."""
    ctx = _ctx(ctx)
    return max((abs_p(ctx, c) for c in x), default=AbsValue.zero(ctx.p))


def inner_t(x: Sequence, y: Sequence) -> Fraction:
    _check_len(x, y)
    return sum((rational(a) * rational(b) for a, b in zip(x, y)), Fraction(0))


def inner_omega(w: Sequence, u: Sequence, v: Sequence) -> Fraction:
    _check_len(w, u, v)
    return sum((rational(c) * rational(a) * rational(b) for c, a, b in zip(w, u, v)), Fraction(0))


def coord_complement(indices: Iterable[int], t: int) -> frozenset[int]:
    s = frozenset(indices)
    if any(not 0 <= i < t for i in s):
        raise IndexError(f"indices {sorted(s)} not inside [0, {t})")
    return frozenset(range(t)) - s


def coord_span_contains(indices: Iterable[int], x: Sequence) -> bool:
    """Is x supported on the given coordinate positions?"""
    s = frozenset(indices)
    return all(c == 0 for i, c in enumerate(x) if i not in s)
